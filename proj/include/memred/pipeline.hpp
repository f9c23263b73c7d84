#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "memred/automaton.hpp"
#include "memred/strategy.hpp"

namespace memred {

struct PipelineOptions {
  bool full_memory = false;
  bool normalize = true;
  bool run_baseline = true;
  std::size_t max_product_vertices = 6'000'000;
  std::size_t max_sim_positions = 40'000'000;
};

struct StageTimes {
  double simulation_ms = 0;
  double automaton_ms = 0;
  double reduction_ms = 0;
  double strategy_ms = 0;
  double baseline_ms = 0;
  double verification_ms = 0;
};

struct PipelineReport {
  std::string game_name;
  std::uint32_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::uint32_t num_pairs = 0;

  std::uint32_t expanded_memory = 0;                 // |S| materialized
  std::optional<std::uint64_t> full_memory_size;     // mathematical |S|, full mode
  std::uint32_t reduced_memory = 0;                  // |S / ~S|
  std::uint32_t baseline_controller_states = 0;      // minimized
  std::uint32_t reduced_controller_states = 0;       // minimized

  bool baseline_verified = false;
  bool reduced_verified = false;
  bool baseline_ran = false;
  /// Streett only: the solved baseline strategy used no odd-colored
  /// edges, so the 2^k lower-bound claim applies to it.
  std::optional<bool> bound_check_applicable;

  std::vector<VertexId> winning_from;  // original vertices Player 0 wins from
  std::size_t sim_game_vertices = 0;
  std::size_t sim_game_bound = 0;
  std::string notes;
  StageTimes times;
};

/// Intermediate products of a pipeline run, for DOT export and file dumps.
struct PipelineArtifacts {
  SimulatedGame expanded;
  GameAutomaton automaton;  // the automaton the reduction ran on
  GameAutomaton quotient;
  MealyStrategy reduced_controller;
  MealyStrategy baseline_controller;  // meaningful when the baseline ran
};

/// Executes the full memory-reduction pipeline (and, by default, the
/// baseline path without step 3) on a request-response or Streett game;
/// both controllers are verified from every winning initial vertex.
PipelineReport run_pipeline(const Game& game, const PipelineOptions& options = {},
                            const std::string& name = "game",
                            PipelineArtifacts* artifacts = nullptr);

std::string report_to_json(const PipelineReport& report, bool include_times = true);
std::string report_to_table(const PipelineReport& report);

/// The request-response family with an exponential baseline/reduced gap:
/// a Player-1 diamond chain of k request choices, a Player-0 chain of k
/// response choices, then x -> y with y answering every pair.
Game gen_rr(std::uint32_t k);

/// The Streett variant: same shape, but y closes the loop back to the
/// first vertex; 2k+1 pairs including the final (V,V).
Game gen_streett(std::uint32_t k);

/// Random total games for the test suites.
Game gen_random_game(std::uint64_t seed, std::uint32_t num_vertices, const std::string& type,
                     std::uint32_t num_pairs, int max_color = 4);

/// Random deterministic automata (no sink, no game annotations).
GameAutomaton gen_random_buchi_automaton(std::uint64_t seed, std::uint32_t states,
                                         std::uint32_t letters);
GameAutomaton gen_random_parity_automaton(std::uint64_t seed, std::uint32_t states,
                                          std::uint32_t letters, int max_color,
                                          Polarity polarity = Polarity::MinEven);

}  // namespace memred
