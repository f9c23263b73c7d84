#pragma once

#include <random>

#include "memred/automaton.hpp"
#include "memred/bisim.hpp"
#include "memred/reductions.hpp"

// Test-side oracles, independent of the implementation paths they check.
namespace memred::oracles {

/// Request-response semantics by explicit unrolling of prefix.cycle^3 and
/// the quantifier formula "every request has a later response".
bool rr_satisfies_unrolled(const std::vector<RrPair>& pairs, const Lasso& lasso);

/// Winner of a parity game per vertex by enumerating Player 0's positional
/// strategies and checking Player 1's best response through cycle search.
/// Feasible up to ~8 vertices.
std::vector<bool> parity_winner_brute_force(const Game& game);

/// Direct bisimulation by reachability of a finality disagreement in the
/// pair graph.
bool direct_bisim_oracle(const GameAutomaton& aut, StateId p, StateId q);

/// Delayed simulation by explicitly building the obligation-bit game and
/// solving it as a Buchi game. A move after which both runs sit in the
/// rejecting sink discharges the obligation.
std::vector<bool> delayed_sim_oracle(const GameAutomaton& aut);  // p*n+q matrix

/// Kosaraju SCC (two-pass DFS), independent of the Tarjan used in the
/// library; used by the normalization oracle.
std::vector<std::uint32_t> kosaraju_scc(std::uint32_t n,
                                        const std::vector<std::vector<std::uint32_t>>& adj);

/// The per-SCC color compaction rule iterated naively to its fixed point.
std::vector<int> normalize_colors_oracle(const GameAutomaton& aut);

/// Which of the seven priority-memory case guards fire for (i, j, k);
/// bit c set means case c+1 applies. Encodes the guards verbatim.
unsigned pm_case_guards(int i, int j, int k_value, bool k_is_checkmark);

/// A random ultimately-periodic path through the arena.
Lasso random_lasso(const Arena& arena, std::mt19937_64& rng, std::uint32_t max_prefix = 6);

/// The unique expanded play of a lasso: memories threaded along the
/// prefix, then the cycle pumped until the memory at the cycle entry
/// repeats. Returns product-vertex ids.
Lasso transform_lasso(const SimulatedGame& sim, const Lasso& lasso);

/// Small hand-built game helper; owners[i] in {'0','1'}.
Game make_game(std::uint32_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
               const std::string& owners, WinningCondition condition);

}  // namespace memred::oracles
