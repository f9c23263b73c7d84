#pragma once

#include <vector>

#include "memred/arena.hpp"

namespace memred {

/// Full partition of the arena into winning regions with positional
/// strategies. strategy0 is defined on Player-0 vertices inside winning0
/// (kNoVertex elsewhere), symmetrically for strategy1.
struct SolveResult {
  std::vector<bool> winning0;
  std::vector<bool> winning1;
  std::vector<VertexId> strategy0;
  std::vector<VertexId> strategy1;
};

struct AttractorResult {
  std::vector<bool> in_attractor;
  std::vector<VertexId> strategy;     // attracting player's move, kNoVertex outside
  std::vector<std::uint32_t> rank;    // BFS distance to the target, 0 inside it
};

/// Least set containing `target` that `player` can force the play into.
/// The strategy picks a rank-decreasing successor (smallest rank, then
/// smallest id).
AttractorResult attractor(const Arena& arena, Player player, const std::vector<bool>& target);

/// Subgame variant: only vertices with alive[v] participate.
AttractorResult attractor(const Arena& arena, Player player, const std::vector<bool>& target,
                          const std::vector<bool>& alive);

/// W0 = Attr0(Recur0(F)) with the classical nested fixpoint; Player 1's
/// strategy comes from the dual co-Buchi decomposition.
SolveResult solve_buchi(const Game& game);

/// Zielonka recursion. MinEven games are flipped to an equivalent MaxEven
/// instance (c -> M - c for even M), which preserves every color's parity.
SolveResult solve_parity(const Game& game);

/// Dispatches on the condition type; rejects rr/streett conditions
/// (those are solved through their game simulations).
SolveResult solve_game(const Game& game);

}  // namespace memred
