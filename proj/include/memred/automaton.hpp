#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "memred/reductions.hpp"

namespace memred {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = static_cast<StateId>(-1);

struct BuchiAcceptance {
  std::vector<bool> final_states;
};

struct ParityAcceptance {
  std::vector<int> colors;
  Polarity polarity = Polarity::MaxEven;
};

using Acceptance = std::variant<BuchiAcceptance, ParityAcceptance>;

/// Deterministic omega-automaton over the alphabet of original vertex
/// ids. Game automata additionally carry owner tags and the (s,v)
/// projection, with states laid out as q0, qsink, then s*|V|+v.
struct GameAutomaton {
  std::uint32_t alphabet = 0;
  std::uint32_t num_states = 0;
  StateId initial = 0;
  StateId sink = kNoState;  // kNoState for plain automata without one
  std::vector<StateId> delta;  // num_states * alphabet, row-major
  Acceptance acceptance;

  std::vector<Player> owner_tag;                          // empty for plain automata
  std::vector<std::pair<MemoryId, VertexId>> memory_of;   // empty for plain automata
  std::vector<std::string> state_labels;
  std::vector<std::string> letter_labels;                 // original vertex labels

  /// "(s-id, v-label)" for product states, the stored label otherwise.
  std::string label_of(StateId q) const;

  StateId next(StateId q, VertexId a) const { return delta[static_cast<std::size_t>(q) * alphabet + a]; }
  bool is_buchi() const { return std::holds_alternative<BuchiAcceptance>(acceptance); }
  bool is_final(StateId q) const { return std::get<BuchiAcceptance>(acceptance).final_states[q]; }
  int color(StateId q) const { return std::get<ParityAcceptance>(acceptance).colors[q]; }
  bool is_game_automaton() const { return !memory_of.empty(); }
};

/// Equivalence classes of memory contents with the creation-order data
/// used to pick quotient representatives.
struct MemoryPartition {
  std::uint32_t num_contents = 0;
  std::vector<std::uint32_t> class_of;            // content -> class id
  std::vector<std::vector<MemoryId>> classes;     // ascending members
  std::vector<MemoryId> representative;           // class -> minimal member

  std::uint32_t size() const { return static_cast<std::uint32_t>(classes.size()); }
};

MemoryPartition identity_partition(std::uint32_t num_contents);
MemoryPartition partition_from_class_ids(std::vector<std::uint32_t> class_of);

/// Same-V state-level equivalence, indexed [v][content] -> class id. Used
/// to lift parity colors (min over the state class) and to cross-check
/// that a memory partition only merges state-equivalent contents.
struct StateEquivalence {
  std::vector<std::vector<std::uint32_t>> class_at;
};

/// The expanded game viewed as an acceptor of plays: delta follows the
/// product edges, labeled by the target's V-component; non-edges go to
/// qsink, which is rejecting.
GameAutomaton game_to_automaton(const SimulatedGame& sim);

/// Inverse view: drops q0/qsink and keeps owner tags and acceptance.
Game automaton_to_game(const GameAutomaton& aut);

/// Buchi closure: grow F to the least fixed point of "all successors
/// final". qsink is skipped both as a candidate and among successors
/// (runs through it are rejecting either way); on sink-free automata this
/// is the literal rule.
GameAutomaton closure(const GameAutomaton& aut);

/// Quotient automaton over memory classes. delta picks the creation-order
/// minimal successor content over each class; Buchi finality requires all
/// members to agree (incompatible_partition_error otherwise); parity
/// colors take the minimum over the state class when `eq` is given.
GameAutomaton quotient(const GameAutomaton& aut, const MemoryPartition& part,
                       const StateEquivalence* eq = nullptr);

struct EquivalenceResult {
  bool equal = true;
  Lasso witness;  // accepted by exactly one side when !equal
};

/// Language equivalence of two deterministic automata over the same
/// alphabet via color-constrained SCC search on the product; returns a
/// greedily minimized witness lasso on failure.
EquivalenceResult det_omega_equiv(const GameAutomaton& a, const GameAutomaton& b);

/// Runs the automaton on prefix.cycle^omega (from `start`, default the
/// initial state) and evaluates acceptance on the eventually-repeating
/// part.
bool accepts(const GameAutomaton& aut, const Lasso& word,
             std::optional<StateId> start = std::nullopt);

/// Flip a max-parity automaton to the equivalent min-parity one (c -> M-c
/// with even M over non-sink states); q0/qsink get the worst color 1.
GameAutomaton to_min_parity(const GameAutomaton& aut);

/// Re-wraps a (typically quotient) game automaton as a SimulatedGame over
/// the given original game, so strategy extraction applies uniformly.
SimulatedGame simulation_from_automaton(const GameAutomaton& aut, const Game& original);

/// Byte-deterministic DOT rendering; final states double-circled, parity
/// colors as "c=N" suffixes.
std::string to_dot(const GameAutomaton& aut, const std::string& name = "automaton");

}  // namespace memred
