#pragma once

#include <unordered_map>

#include "memred/automaton.hpp"

namespace memred {

/// Reward order on colors under min-parity: 0 < 2 < 4 < ... < 5 < 3 < 1.
/// Even beats odd; among evens smaller is better; among odds larger is.
bool reward_leq(int m, int n);
bool reward_less(int m, int n);

/// A pending obligation: either a color or the checkmark (discharged).
struct PriorityMemory {
  static constexpr int kCheckmark = -1;
  int value = kCheckmark;

  bool is_checkmark() const { return value == kCheckmark; }
  bool operator==(const PriorityMemory&) const = default;
};

inline PriorityMemory checkmark() { return {}; }
inline PriorityMemory obligation(int color) { return {color}; }

/// The seven-case priority memory update, with the language-safe variant
/// of case iv (the value is k, not the checkmark).
PriorityMemory pm_update(int i, int j, PriorityMemory k);

/// Initial obligation for a pair of states with colors i and j:
/// min{i,j} if i is strictly better than j, otherwise the checkmark.
PriorityMemory initial_priority_memory(int i, int j);

/// One position of the right-hand delayed simulation game: Spoiler's run
/// at (left,v), Duplicator's at (right,v), and the pending obligation.
struct SimGameVertex {
  MemoryId left = 0;
  MemoryId right = 0;
  VertexId v = 0;
  PriorityMemory pm;
};

/// The simulation game as a one-player Buchi game: all vertices belong to
/// Spoiler, Duplicator wins iff the checkmark recurs.
struct SimGame {
  Game game;
  std::vector<SimGameVertex> info;
  std::unordered_map<std::uint64_t, VertexId> index;
  std::uint32_t memory_count = 0;
  std::uint32_t original_vertices = 0;
  std::size_t size_bound = 0;  // sum over v of |S_v|^2 * (colors + 1)

  VertexId position(MemoryId left, MemoryId right, VertexId v, PriorityMemory pm) const;
};

/// Builds the reachable part of the simulation game from every initial
/// position p_I((s1,v),(s2,v)). The automaton must be min-parity.
SimGame build_sim_game(const GameAutomaton& aut);

/// s1-at-v right-hand delayed simulated by s2-at-v, for all same-V pairs.
struct RhdeRelation {
  std::uint32_t memory_count = 0;
  std::uint32_t vertices = 0;
  std::vector<std::vector<bool>> leq;  // [v] -> row-major memory_count^2
  std::size_t sim_vertices = 0;
  std::size_t sim_bound = 0;

  bool related(VertexId v, MemoryId s1, MemoryId s2) const {
    return leq[v][static_cast<std::size_t>(s1) * memory_count + s2];
  }
  bool equivalent(VertexId v, MemoryId s1, MemoryId s2) const {
    return related(v, s1, s2) && related(v, s2, s1);
  }
};

/// Solves the simulation game with the Buchi solver and reads off
/// Duplicator's winning region at the initial positions.
RhdeRelation rhde_relation(const GameAutomaton& aut);

/// Same-v equivalence classes of the mutual rhde relation.
StateEquivalence state_equivalence_from_rhde(const RhdeRelation& rel);

/// s1 ~S s2 iff (s1,v) and (s2,v) are mutually rhde-related for every v.
MemoryPartition memory_equivalence_parity(const GameAutomaton& aut, const RhdeRelation& rel);

/// Per-SCC color compaction: decrement colors >= 2 by 2 while no state of
/// color c-1 shares the SCC; iterated to the fixed point. Min-parity
/// input required; the language is unchanged.
GameAutomaton normalize_colors(const GameAutomaton& aut);

}  // namespace memred
