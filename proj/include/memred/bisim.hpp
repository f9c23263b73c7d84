#pragma once

#include "memred/automaton.hpp"

namespace memred {

struct StatePartition {
  std::uint32_t num_blocks = 0;
  std::vector<std::uint32_t> block_of;         // state -> block id
  std::vector<std::vector<StateId>> blocks;    // ascending members

  bool same_block(StateId p, StateId q) const { return block_of[p] == block_of[q]; }
};

/// Coarsest refinement of {F, Q\F} closed under the transition function
/// (Hopcroft worklist refinement with letter-indexed predecessor lists).
StatePartition direct_bisim(const GameAutomaton& aut);

/// Delayed simulation equivalence of a deterministic Buchi automaton:
/// direct bisimulation on the closure.
StatePartition delayed_sim_partition(const GameAutomaton& aut);

/// Groups memory contents whose (s,v) states share a partition block for
/// every v.
MemoryPartition memory_partition_from_states(const GameAutomaton& aut,
                                             const StatePartition& part);

/// Per-vertex state classes of a memory-indexed automaton, for the
/// quotient's acceptance lift and compatibility check.
StateEquivalence state_equivalence_from_partition(const GameAutomaton& aut,
                                                  const StatePartition& part);

/// s1 ~S s2 iff (s1,v) and (s2,v) are delayed-simulation equivalent for
/// every v in V.
MemoryPartition memory_equivalence_buchi(const GameAutomaton& aut);

}  // namespace memred
