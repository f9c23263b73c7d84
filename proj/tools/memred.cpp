#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "memred/bisim.hpp"
#include "memred/game_io.hpp"
#include "memred/pipeline.hpp"
#include "memred/rhdelay.hpp"

namespace {

using namespace memred;

struct CommonFlags {
  bool full_memory = false;
  bool no_normalize = false;
  bool json_report = false;
  std::string emit_dot;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << content;
}

void emit_dot_files(const std::string& dir, const GameAutomaton* base,
                    const GameAutomaton* reduced, const MealyStrategy* controller) {
  std::filesystem::create_directories(dir);
  if (base) write_file(dir + "/automaton.dot", to_dot(*base, "automaton"));
  if (reduced) write_file(dir + "/quotient.dot", to_dot(*reduced, "quotient"));
  if (controller) write_file(dir + "/controller.dot", controller_to_dot(*controller));
}

int run_solve(const std::string& path, const CommonFlags& flags) {
  const Game game = load_game(path);

  SimulatedGame sim;
  if (std::holds_alternative<RequestResponseCondition>(game.condition)) {
    sim = rr_to_buchi(game, {flags.full_memory});
  } else if (std::holds_alternative<StreettCondition>(game.condition)) {
    sim = streett_to_parity(game, {flags.full_memory});
  } else {
    sim = trivial_simulation(game);
  }

  const SolveResult solve = solve_game(sim.product);
  const MealyStrategy controller = minimize_mealy(extract_strategy(sim, solve));

  std::vector<VertexId> winners;
  for (VertexId v = 0; v < game.arena.size(); ++v)
    if (solve.winning0[sim.product_vertex(sim.initial_memory, v)]) winners.push_back(v);

  bool verified = true;
  for (VertexId v : winners) verified &= verify_strategy(game, controller, v).ok;

  if (flags.json_report) {
    nlohmann::json doc;
    doc["winning_from"] = winners;
    doc["expanded_memory"] = sim.memory_count;
    doc["controller_states"] = controller.num_states;
    doc["controller_verified"] = verified;
    doc["controller"] = nlohmann::json::parse(controller_to_json(controller));
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "Player 0 wins from: ";
    for (std::size_t i = 0; i < winners.size(); ++i) std::cout << (i ? "," : "") << winners[i];
    std::cout << "\ncontroller states: " << controller.num_states
              << (verified ? " [verified]" : " [VERIFICATION FAILED]") << "\n";
  }
  if (!flags.emit_dot.empty()) emit_dot_files(flags.emit_dot, nullptr, nullptr, &controller);
  return verified ? 0 : 2;
}

int run_reduce(const std::string& path, const CommonFlags& flags, bool baseline) {
  const Game game = load_game(path);
  PipelineOptions options;
  options.full_memory = flags.full_memory;
  options.normalize = !flags.no_normalize;
  options.run_baseline = baseline;
  PipelineArtifacts artifacts;
  const PipelineReport report =
      run_pipeline(game, options, std::filesystem::path(path).stem().string(), &artifacts);

  std::cout << (flags.json_report ? report_to_json(report) : report_to_table(report));

  if (!flags.emit_dot.empty()) {
    emit_dot_files(flags.emit_dot, &artifacts.automaton, &artifacts.quotient,
                   &artifacts.reduced_controller);
    write_file(flags.emit_dot + "/expanded_game.json",
               serialize_simulated_game(artifacts.expanded));
  }
  const bool verified =
      report.reduced_verified && (!report.baseline_ran || report.baseline_verified);
  return verified ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"memory reduction for request-response and Streett game controllers"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string path;
  std::uint32_t k = 1;
  std::string random_type = "rr";
  std::uint32_t random_n = 6;
  std::uint64_t seed = 1;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--full-memory", flags.full_memory,
                  "materialize the complete memory set (small k only)");
    cmd->add_flag("--no-normalize", flags.no_normalize, "skip the parity color normalization");
    cmd->add_flag("--json-report", flags.json_report, "emit the report as JSON");
    cmd->add_option("--emit-dot", flags.emit_dot, "directory for DOT renderings");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve a game and synthesize a controller");
  solve->add_option("file", path, "game file")->required();
  add_common(solve);

  CLI::App* reduce = app.add_subcommand("reduce", "run the memory-reduction pipeline");
  reduce->add_option("file", path, "game file")->required();
  add_common(reduce);

  CLI::App* compare =
      app.add_subcommand("compare", "run both the baseline and the reduced pipeline");
  compare->add_option("file", path, "game file")->required();
  add_common(compare);

  CLI::App* gen = app.add_subcommand("gen", "generate example games");
  gen->require_subcommand(1);
  CLI::App* gen_rr_cmd = gen->add_subcommand("rr", "request-response diamond-chain family");
  gen_rr_cmd->add_option("k", k, "number of decision rounds")->required();
  gen_rr_cmd->add_option("--out", out_path, "output file (default stdout)");
  CLI::App* gen_st_cmd = gen->add_subcommand("streett", "Streett diamond-chain family");
  gen_st_cmd->add_option("k", k, "number of decision rounds")->required();
  gen_st_cmd->add_option("--out", out_path, "output file (default stdout)");
  CLI::App* gen_rand_cmd = gen->add_subcommand("random", "random total game");
  gen_rand_cmd->add_option("type", random_type, "rr|streett|buchi|parity")->required();
  gen_rand_cmd->add_option("n", random_n, "vertex count")->required();
  gen_rand_cmd->add_option("k", k, "pair count / max color");
  gen_rand_cmd->add_option("--seed", seed, "rng seed");
  gen_rand_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(path, flags);
    if (reduce->parsed()) return run_reduce(path, flags, false);
    if (compare->parsed()) return run_reduce(path, flags, true);
    if (gen->parsed()) {
      Game game;
      if (gen_rr_cmd->parsed()) game = memred::gen_rr(k);
      if (gen_st_cmd->parsed()) game = memred::gen_streett(k);
      if (gen_rand_cmd->parsed()) game = gen_random_game(seed, random_n, random_type, k, k);
      const std::string text = serialize_game(game);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      return 0;
    }
  } catch (const memred::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
