#pragma once

#include <optional>

#include "memred/reductions.hpp"
#include "memred/solvers.hpp"

namespace memred {

/// Finite-state controller: reads the vertex the token lands on, updates
/// its memory state, and names Player 0's move at Player-0 vertices.
/// output is kNoVertex where no move is defined.
struct MealyStrategy {
  std::uint32_t num_states = 0;
  std::uint32_t alphabet = 0;  // observed vertices of the original arena
  std::uint32_t initial = 0;
  std::vector<std::uint32_t> transition;  // state*alphabet + v -> state
  std::vector<VertexId> output;           // state*alphabet + v -> chosen successor

  std::uint32_t next(std::uint32_t q, VertexId v) const {
    return transition[static_cast<std::size_t>(q) * alphabet + v];
  }
  VertexId move(std::uint32_t q, VertexId v) const {
    return output[static_cast<std::size_t>(q) * alphabet + v];
  }
};

/// Mealy machine from a positional strategy on the (possibly reduced)
/// expanded game: states are the memory contents, transitions follow the
/// memory update, outputs project the strategy to the original arena.
/// Throws not_winning_error when `from` is given and its expansion lies
/// outside Player 0's region.
MealyStrategy extract_strategy(const SimulatedGame& sim, const SolveResult& solve,
                               std::optional<VertexId> from = std::nullopt);

/// One-state controller from a positional strategy on the game itself.
MealyStrategy positional_controller(const Game& game, const SolveResult& solve);

/// Classical Mealy minimization: drop unreachable states, then refine by
/// output rows and successor blocks.
MealyStrategy minimize_mealy(const MealyStrategy& m);

struct VerifyResult {
  bool ok = true;
  Lasso counterexample;  // a losing play when !ok
};

/// Model-checks the controller on the arena: builds the product with
/// Player 1 unconstrained and searches for a reachable cycle violating the
/// condition (request-response is checked through its Buchi memory, which
/// makes the prefix-dependent condition cycle-checkable).
VerifyResult verify_strategy(const Game& game, const MealyStrategy& m, VertexId from);

/// Controller serialization: structured-text transition/output tables and
/// a DOT rendering.
std::string controller_to_json(const MealyStrategy& m);
std::string controller_to_dot(const MealyStrategy& m, const std::string& name = "controller");

}  // namespace memred
