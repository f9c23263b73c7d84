#include "memred/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "memred/bisim.hpp"
#include "memred/rhdelay.hpp"

namespace memred {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct ReducedPath {
  GameAutomaton quotient_aut;
  std::uint32_t classes = 0;
  std::size_t sim_vertices = 0;
  std::size_t sim_bound = 0;
};

ReducedPath reduce_buchi(const GameAutomaton& aut) {
  ReducedPath out;
  const GameAutomaton cl = closure(aut);
  const StatePartition blocks = direct_bisim(cl);
  const MemoryPartition part = memory_partition_from_states(cl, blocks);
  const StateEquivalence eq = state_equivalence_from_partition(cl, blocks);
  out.quotient_aut = quotient(cl, part, &eq);
  out.classes = part.size();
  return out;
}

ReducedPath reduce_parity(const GameAutomaton& min_aut, const PipelineOptions& options) {
  ReducedPath out;
  const std::uint32_t n = min_aut.alphabet;
  const std::uint32_t mem = (min_aut.num_states - 2) / n;
  const std::size_t seeds = static_cast<std::size_t>(mem) * mem * n;
  if (seeds > options.max_sim_positions)
    throw error("simulation game needs " + std::to_string(seeds) +
                " initial positions, above the configured limit");
  const RhdeRelation rel = rhde_relation(min_aut);
  const MemoryPartition part = memory_equivalence_parity(min_aut, rel);
  const StateEquivalence eq = state_equivalence_from_rhde(rel);
  out.quotient_aut = quotient(min_aut, part, &eq);
  out.classes = part.size();
  out.sim_vertices = rel.sim_vertices;
  out.sim_bound = rel.sim_bound;
  return out;
}

}  // namespace

PipelineReport run_pipeline(const Game& game, const PipelineOptions& options,
                            const std::string& name, PipelineArtifacts* artifacts) {
  validate(game);
  const bool is_rr = std::holds_alternative<RequestResponseCondition>(game.condition);
  const bool is_streett = std::holds_alternative<StreettCondition>(game.condition);
  if (!is_rr && !is_streett)
    throw wrong_condition_type_error("run_pipeline expects a request-response or streett game");

  PipelineReport report;
  report.game_name = name;
  report.num_vertices = game.arena.size();
  report.num_edges = game.arena.num_edges();
  report.num_pairs = is_rr ? std::get<RequestResponseCondition>(game.condition).pairs.size()
                           : std::get<StreettCondition>(game.condition).pairs.size();

  ExpansionOptions expansion;
  expansion.full_memory = options.full_memory;
  expansion.max_product_vertices = options.max_product_vertices;

  // Step 1: game simulation.
  auto t0 = Clock::now();
  SimulatedGame sim = is_rr ? rr_to_buchi(game, expansion) : streett_to_parity(game, expansion);
  report.times.simulation_ms = ms_since(t0);
  report.expanded_memory = sim.memory_count;
  if (options.full_memory) {
    if (is_rr) {
      const auto& machine = static_cast<const RrMemoryMachine&>(*sim.machine);
      report.full_memory_size =
          (std::uint64_t{1} << machine.pair_count()) * machine.pair_count() * 2;
    } else {
      const auto& machine = static_cast<const IarMemoryMachine&>(*sim.machine);
      std::uint64_t perms = 1;
      for (std::uint32_t i = 2; i <= machine.index_count(); ++i) perms *= i;
      report.full_memory_size = perms * machine.index_count() * machine.index_count();
    }
  }

  // Step 2: view as omega-automaton.
  t0 = Clock::now();
  GameAutomaton aut = game_to_automaton(sim);
  GameAutomaton working = aut;
  if (is_streett) {
    working = to_min_parity(aut);
    if (options.normalize) working = normalize_colors(working);
  }
  report.times.automaton_ms = ms_since(t0);

  // Step 3: reduce the automaton and quotient.
  t0 = Clock::now();
  ReducedPath reduced = is_rr ? reduce_buchi(working) : reduce_parity(working, options);
  report.times.reduction_ms = ms_since(t0);
  report.reduced_memory = reduced.classes;
  report.sim_game_vertices = reduced.sim_vertices;
  report.sim_game_bound = reduced.sim_bound;

  // Steps 4-5: view the quotient as a game and build the controller.
  t0 = Clock::now();
  SimulatedGame reduced_sim = simulation_from_automaton(reduced.quotient_aut, game);
  const SolveResult reduced_solve = solve_game(reduced_sim.product);
  MealyStrategy reduced_controller =
      minimize_mealy(extract_strategy(reduced_sim, reduced_solve));
  report.times.strategy_ms = ms_since(t0);
  report.reduced_controller_states = reduced_controller.num_states;

  for (VertexId v = 0; v < game.arena.size(); ++v)
    if (reduced_solve.winning0[reduced_sim.product_vertex(reduced_sim.initial_memory, v)])
      report.winning_from.push_back(v);

  // Baseline: skip the reduction step, then minimize classically.
  MealyStrategy baseline_controller;
  if (options.run_baseline) {
    t0 = Clock::now();
    const SolveResult baseline_solve = solve_game(sim.product);
    baseline_controller = minimize_mealy(extract_strategy(sim, baseline_solve));
    report.baseline_ran = true;
    report.baseline_controller_states = baseline_controller.num_states;

    std::vector<VertexId> baseline_winning;
    for (VertexId v = 0; v < game.arena.size(); ++v)
      if (baseline_solve.winning0[sim.product_vertex(sim.initial_memory, v)])
        baseline_winning.push_back(v);
    if (baseline_winning != report.winning_from)
      report.notes += "[warning: baseline and reduced winning regions differ]";

    if (is_streett) {
      // Theorem precondition: the positional strategy avoids odd colors.
      const auto& colors = std::get<ParityCondition>(sim.product.condition).colors;
      bool all_even = true;
      for (VertexId pv = 0; pv < sim.product.arena.size(); ++pv)
        if (baseline_solve.winning0[pv] && baseline_solve.strategy0[pv] != kNoVertex)
          all_even &= colors[baseline_solve.strategy0[pv]] % 2 == 0;
      report.bound_check_applicable = all_even;
      if (!all_even) report.notes += "[bound check skipped: strategy uses odd-colored edges]";
    }
    report.times.baseline_ms = ms_since(t0);
  }

  // Verify both controllers on the original game from every winning vertex.
  t0 = Clock::now();
  report.reduced_verified = true;
  report.baseline_verified = report.baseline_ran;
  for (VertexId v : report.winning_from) {
    report.reduced_verified &= verify_strategy(game, reduced_controller, v).ok;
    if (report.baseline_ran)
      report.baseline_verified &= verify_strategy(game, baseline_controller, v).ok;
  }
  report.times.verification_ms = ms_since(t0);

  if (artifacts) {
    artifacts->expanded = std::move(sim);
    artifacts->automaton = std::move(working);
    artifacts->quotient = std::move(reduced.quotient_aut);
    artifacts->reduced_controller = std::move(reduced_controller);
    artifacts->baseline_controller = std::move(baseline_controller);
  }
  return report;
}

std::string report_to_json(const PipelineReport& r, bool include_times) {
  nlohmann::json doc;
  doc["game"] = r.game_name;
  doc["vertices"] = r.num_vertices;
  doc["edges"] = r.num_edges;
  doc["pairs"] = r.num_pairs;
  doc["expanded_memory"] = r.expanded_memory;
  if (r.full_memory_size) doc["full_memory_size"] = *r.full_memory_size;
  doc["reduced_memory"] = r.reduced_memory;
  doc["reduced_controller_states"] = r.reduced_controller_states;
  doc["reduced_verified"] = r.reduced_verified;
  if (r.baseline_ran) {
    doc["baseline_controller_states"] = r.baseline_controller_states;
    doc["baseline_verified"] = r.baseline_verified;
  }
  if (r.bound_check_applicable) doc["bound_check_applicable"] = *r.bound_check_applicable;
  doc["winning_from"] = r.winning_from;
  if (r.sim_game_vertices) {
    doc["sim_game_vertices"] = r.sim_game_vertices;
    doc["sim_game_bound"] = r.sim_game_bound;
  }
  if (!r.notes.empty()) doc["notes"] = r.notes;
  if (include_times) {
    doc["times_ms"] = {{"simulation", r.times.simulation_ms},
                       {"automaton", r.times.automaton_ms},
                       {"reduction", r.times.reduction_ms},
                       {"strategy", r.times.strategy_ms},
                       {"baseline", r.times.baseline_ms},
                       {"verification", r.times.verification_ms}};
  }
  return doc.dump(2) + "\n";
}

std::string report_to_table(const PipelineReport& r) {
  std::ostringstream out;
  out << "game:                  " << r.game_name << "\n"
      << "|V| / |E| / pairs:     " << r.num_vertices << " / " << r.num_edges << " / "
      << r.num_pairs << "\n"
      << "expanded memory |S|:   " << r.expanded_memory;
  if (r.full_memory_size) out << "  (full set " << *r.full_memory_size << ")";
  out << "\n"
      << "reduced memory |S/~|:  " << r.reduced_memory << "\n"
      << "reduced controller:    " << r.reduced_controller_states
      << (r.reduced_verified ? "  [verified]" : "  [VERIFICATION FAILED]") << "\n";
  if (r.baseline_ran)
    out << "baseline controller:   " << r.baseline_controller_states
        << (r.baseline_verified ? "  [verified]" : "  [VERIFICATION FAILED]") << "\n";
  if (r.bound_check_applicable)
    out << "bound check:           " << (*r.bound_check_applicable ? "applicable" : "skipped")
        << "\n";
  if (r.sim_game_vertices)
    out << "sim game vertices:     " << r.sim_game_vertices << " (bound " << r.sim_game_bound
        << ")\n";
  out << "winning from:          ";
  for (std::size_t i = 0; i < r.winning_from.size(); ++i)
    out << (i ? "," : "") << r.winning_from[i];
  out << "\n";
  if (!r.notes.empty()) out << "notes:                 " << r.notes << "\n";
  out << "times (ms):            sim " << r.times.simulation_ms << ", automaton "
      << r.times.automaton_ms << ", reduction " << r.times.reduction_ms << ", strategy "
      << r.times.strategy_ms << ", baseline " << r.times.baseline_ms << ", verify "
      << r.times.verification_ms << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Generators

namespace {

struct DiamondChain {
  Game game;
  std::vector<VertexId> branch_req;   // v_1..v_k
  std::vector<VertexId> up_req, dn_req;
  std::vector<VertexId> branch_resp;  // w_1..w_k
  std::vector<VertexId> up_resp, dn_resp;
  VertexId x = 0, y = 0;
};

// The shared diamond-chain shape of both figure families: Player 1 takes
// k binary decisions, Player 0 mirrors with k decisions, then x -> y.
DiamondChain diamond_chain(std::uint32_t k) {
  DiamondChain d;
  Arena& arena = d.game.arena;
  auto add = [&](const std::string& label, Player owner) {
    const VertexId id = arena.size();
    arena.vertices.push_back({id, owner, label});
    arena.edges.emplace_back();
    return id;
  };
  for (std::uint32_t i = 1; i <= k; ++i)
    d.branch_req.push_back(add(i == 1 ? "v" : "v" + std::to_string(i), Player::One));
  for (std::uint32_t i = 1; i <= k; ++i) d.up_req.push_back(add("P" + std::to_string(i), Player::One));
  for (std::uint32_t i = 1; i <= k; ++i)
    d.dn_req.push_back(add("P" + std::to_string(i) + "'", Player::One));
  for (std::uint32_t i = 1; i <= k; ++i)
    d.branch_resp.push_back(add(i == 1 ? "w" : "w" + std::to_string(i), Player::Zero));
  for (std::uint32_t i = 1; i <= k; ++i) d.up_resp.push_back(add("R" + std::to_string(i), Player::One));
  for (std::uint32_t i = 1; i <= k; ++i)
    d.dn_resp.push_back(add("R" + std::to_string(i) + "'", Player::One));
  d.x = add("x", Player::One);
  d.y = add("y", Player::One);

  for (std::uint32_t i = 0; i < k; ++i) {
    arena.edges[d.branch_req[i]] = {d.up_req[i], d.dn_req[i]};
    const VertexId next_req = i + 1 < k ? d.branch_req[i + 1] : d.branch_resp[0];
    arena.edges[d.up_req[i]] = {next_req};
    arena.edges[d.dn_req[i]] = {next_req};
    arena.edges[d.branch_resp[i]] = {d.up_resp[i], d.dn_resp[i]};
    const VertexId next_resp = i + 1 < k ? d.branch_resp[i + 1] : d.x;
    arena.edges[d.up_resp[i]] = {next_resp};
    arena.edges[d.dn_resp[i]] = {next_resp};
  }
  arena.edges[d.x] = {d.y};
  return d;
}

}  // namespace

Game gen_rr(std::uint32_t k) {
  if (k < 1) throw error("gen_rr needs k >= 1");
  DiamondChain d = diamond_chain(k);
  d.game.arena.edges[d.y] = {d.y};

  RequestResponseCondition cond;
  cond.pairs.push_back({make_vertex_set({d.branch_req[0]}),
                        make_vertex_set({d.branch_resp[0], d.y})});  // (P0, R0)
  for (std::uint32_t i = 0; i < k; ++i) {
    cond.pairs.push_back({make_vertex_set({d.up_req[i]}), make_vertex_set({d.up_resp[i], d.y})});
    cond.pairs.push_back({make_vertex_set({d.dn_req[i]}), make_vertex_set({d.dn_resp[i], d.y})});
  }
  d.game.condition = std::move(cond);
  validate(d.game);
  return d.game;
}

Game gen_streett(std::uint32_t k) {
  if (k < 1) throw error("gen_streett needs k >= 1");
  DiamondChain d = diamond_chain(k);
  d.game.arena.edges[d.y] = {d.branch_req[0]};
  // Relabel the diamond vertices with their Streett memberships.
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::string si = std::to_string(i + 1);
    d.game.arena.vertices[d.up_req[i]].label = "E-" + si + ",F" + si;
    d.game.arena.vertices[d.dn_req[i]].label = "E" + si + ",F-" + si;
    d.game.arena.vertices[d.up_resp[i]].label = "E" + si + ",F-" + si;
    d.game.arena.vertices[d.dn_resp[i]].label = "E-" + si + ",F" + si;
  }

  StreettCondition cond;
  const std::uint32_t n = d.game.arena.size();
  for (std::uint32_t i = 0; i < k; ++i) {
    // index 2i+1 is pair +i, index 2i+2 is pair -i
    cond.pairs.push_back({make_vertex_set({d.dn_req[i], d.up_resp[i], d.y}),
                          make_vertex_set({d.up_req[i], d.dn_resp[i]})});
    cond.pairs.push_back({make_vertex_set({d.up_req[i], d.dn_resp[i], d.y}),
                          make_vertex_set({d.dn_req[i], d.up_resp[i]})});
  }
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  cond.pairs.push_back({all, all});  // (V, V)
  d.game.condition = std::move(cond);
  validate(d.game);
  return d.game;
}

Game gen_random_game(std::uint64_t seed, std::uint32_t num_vertices, const std::string& type,
                     std::uint32_t num_pairs, int max_color) {
  std::mt19937_64 rng(seed);
  Game game;
  Arena& arena = game.arena;
  std::uniform_int_distribution<int> owner_dist(0, 1);
  std::uniform_int_distribution<std::uint32_t> degree_dist(1, 3);
  std::uniform_int_distribution<VertexId> target_dist(0, num_vertices - 1);

  for (VertexId v = 0; v < num_vertices; ++v) {
    arena.vertices.push_back(
        {v, owner_dist(rng) == 0 ? Player::Zero : Player::One, "n" + std::to_string(v)});
    std::vector<VertexId> out;
    const std::uint32_t deg = degree_dist(rng);
    for (std::uint32_t i = 0; i < deg; ++i) out.push_back(target_dist(rng));
    arena.edges.push_back(make_vertex_set(std::move(out)));
  }

  auto random_set = [&](double p) {
    std::bernoulli_distribution pick(p);
    std::vector<VertexId> members;
    for (VertexId v = 0; v < num_vertices; ++v)
      if (pick(rng)) members.push_back(v);
    return make_vertex_set(std::move(members));
  };

  if (type == "rr") {
    RequestResponseCondition cond;
    for (std::uint32_t j = 0; j < num_pairs; ++j)
      cond.pairs.push_back({random_set(0.3), random_set(0.3)});
    game.condition = std::move(cond);
  } else if (type == "streett") {
    StreettCondition cond;
    for (std::uint32_t j = 0; j < num_pairs; ++j)
      cond.pairs.push_back({random_set(0.3), random_set(0.3)});
    game.condition = std::move(cond);
  } else if (type == "buchi") {
    game.condition = BuchiCondition{random_set(0.4)};
  } else if (type == "parity") {
    ParityCondition cond;
    std::uniform_int_distribution<int> color_dist(0, max_color);
    for (VertexId v = 0; v < num_vertices; ++v) cond.colors.push_back(color_dist(rng));
    game.condition = std::move(cond);
  } else {
    throw error("unknown random game type: " + type);
  }
  validate(game);
  return game;
}

GameAutomaton gen_random_buchi_automaton(std::uint64_t seed, std::uint32_t states,
                                         std::uint32_t letters) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<StateId> target(0, states - 1);
  std::bernoulli_distribution final_pick(0.4);

  GameAutomaton aut;
  aut.alphabet = letters;
  aut.num_states = states;
  aut.initial = 0;
  aut.delta.resize(static_cast<std::size_t>(states) * letters);
  for (auto& t : aut.delta) t = target(rng);
  BuchiAcceptance acc;
  acc.final_states.resize(states);
  for (StateId q = 0; q < states; ++q) acc.final_states[q] = final_pick(rng);
  aut.acceptance = std::move(acc);
  return aut;
}

GameAutomaton gen_random_parity_automaton(std::uint64_t seed, std::uint32_t states,
                                          std::uint32_t letters, int max_color,
                                          Polarity polarity) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<StateId> target(0, states - 1);
  std::uniform_int_distribution<int> color(0, max_color);

  GameAutomaton aut;
  aut.alphabet = letters;
  aut.num_states = states;
  aut.initial = 0;
  aut.delta.resize(static_cast<std::size_t>(states) * letters);
  for (auto& t : aut.delta) t = target(rng);
  ParityAcceptance acc;
  acc.polarity = polarity;
  acc.colors.resize(states);
  for (StateId q = 0; q < states; ++q) acc.colors[q] = color(rng);
  aut.acceptance = std::move(acc);
  return aut;
}

}  // namespace memred
