#include <doctest.h>

#include "memred/pipeline.hpp"
#include "memred/solvers.hpp"
#include "memred/strategy.hpp"
#include "oracles.hpp"

using namespace memred;
using oracles::make_game;

TEST_CASE("attractor base cases and the hand-computed chain") {
  Game game = make_game(3, {{0, 1}, {1, 2}, {2, 2}}, "000", BuchiCondition{{2}});
  const std::uint32_t n = 3;

  std::vector<bool> everything(n, true);
  CHECK(attractor(game.arena, Player::Zero, everything).in_attractor ==
        std::vector<bool>{true, true, true});
  std::vector<bool> nothing(n, false);
  CHECK(attractor(game.arena, Player::Zero, nothing).in_attractor ==
        std::vector<bool>{false, false, false});

  std::vector<bool> target{false, false, true};
  const AttractorResult res = attractor(game.arena, Player::Zero, target);
  CHECK(res.in_attractor == std::vector<bool>{true, true, true});
  CHECK(res.rank == std::vector<std::uint32_t>{2, 1, 0});
  CHECK(res.strategy[0] == 1);
  CHECK(res.strategy[1] == 2);
}

TEST_CASE("attractor is monotone and idempotent") {
  for (int round = 0; round < 50; ++round) {
    const Game game = gen_random_game(4000 + round, 7, "buchi", 0);
    std::mt19937_64 rng(round);
    std::vector<bool> small(7, false), large(7, false);
    for (VertexId v = 0; v < 7; ++v) {
      large[v] = rng() % 3 == 0;
      small[v] = large[v] && rng() % 2 == 0;
    }
    const auto attr_small = attractor(game.arena, Player::Zero, small).in_attractor;
    const auto attr_large = attractor(game.arena, Player::Zero, large).in_attractor;
    for (VertexId v = 0; v < 7; ++v)
      if (attr_small[v]) CHECK(attr_large[v]);
    CHECK(attractor(game.arena, Player::Zero, attr_large).in_attractor == attr_large);
  }
}

TEST_CASE("buchi base cases") {
  Game winning = make_game(1, {{0, 0}}, "0", BuchiCondition{{0}});
  CHECK(solve_buchi(winning).winning0 == std::vector<bool>{true});

  Game losing = make_game(1, {{0, 0}}, "0", BuchiCondition{{}});
  CHECK(solve_buchi(losing).winning0 == std::vector<bool>{false});
}

TEST_CASE("parity base cases") {
  Game all_even = make_game(2, {{0, 1}, {1, 0}}, "01",
                            ParityCondition{{2, 0}, Polarity::MaxEven});
  CHECK(solve_parity(all_even).winning0 == std::vector<bool>{true, true});

  Game odd_loop = make_game(1, {{0, 0}}, "0", ParityCondition{{1}, Polarity::MaxEven});
  CHECK(solve_parity(odd_loop).winning0 == std::vector<bool>{false});
}

TEST_CASE("buchi solving matches the two-color parity encoding") {
  for (int round = 0; round < 150; ++round) {
    const Game game = gen_random_game(5000 + round, 8, "buchi", 0);
    const auto& final_set = std::get<BuchiCondition>(game.condition).final_vertices;
    Game encoded = game;
    ParityCondition par;
    par.polarity = Polarity::MaxEven;
    for (VertexId v = 0; v < game.arena.size(); ++v)
      par.colors.push_back(set_contains(final_set, v) ? 2 : 1);
    encoded.condition = par;
    CHECK(solve_buchi(game).winning0 == solve_parity(encoded).winning0);
  }
}

TEST_CASE("zielonka matches the exhaustive positional-strategy oracle") {
  for (int round = 0; round < 60; ++round) {
    const Game game = gen_random_game(6000 + round, 7, "parity", 0, 3);
    CHECK(solve_parity(game).winning0 == oracles::parity_winner_brute_force(game));
  }
}

TEST_CASE("regions partition the arena and strategies stay winning") {
  for (int round = 0; round < 80; ++round) {
    const bool buchi = round % 2 == 0;
    const Game game = buchi ? gen_random_game(7000 + round, 8, "buchi", 0)
                            : gen_random_game(7000 + round, 8, "parity", 0, 4);
    const SolveResult solve = solve_game(game);
    for (VertexId v = 0; v < game.arena.size(); ++v) {
      CHECK(solve.winning0[v] != solve.winning1[v]);
      if (solve.winning0[v] && game.arena.owner(v) == Player::Zero)
        CHECK(solve.strategy0[v] != kNoVertex);
    }
    const MealyStrategy controller = positional_controller(game, solve);
    for (VertexId v = 0; v < game.arena.size(); ++v)
      if (solve.winning0[v]) CHECK(verify_strategy(game, controller, v).ok);
  }
}

TEST_CASE("player 1 wins by layered cores even when player 0 can spend visits") {
  // Player 0 may visit the final vertex once, but it sits on no cycle.
  Game game = make_game(3, {{0, 0}, {0, 1}, {1, 2}, {2, 2}}, "011", BuchiCondition{{1}});
  const SolveResult solve = solve_buchi(game);
  CHECK(solve.winning1 == std::vector<bool>{true, true, true});
}

TEST_CASE("player 1's buchi strategy keeps every final visit off the cycles") {
  for (int round = 0; round < 120; ++round) {
    const Game game = gen_random_game(29000 + round, 8, "buchi", 0);
    const auto& final_set = std::get<BuchiCondition>(game.condition).final_vertices;
    const SolveResult solve = solve_buchi(game);
    const std::uint32_t n = game.arena.size();

    // Fix Player 1's moves inside W1 and leave Player 0 free; no cycle
    // reachable inside W1 may touch a final vertex.
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (VertexId v = 0; v < n; ++v) {
      if (!solve.winning1[v]) continue;
      if (game.arena.owner(v) == Player::One) {
        REQUIRE(solve.strategy1[v] != kNoVertex);
        CHECK(solve.winning1[solve.strategy1[v]]);
        adj[v].push_back(solve.strategy1[v]);
      } else {
        for (VertexId t : game.arena.edges[v]) {
          CHECK(solve.winning1[t]);
          adj[v].push_back(t);
        }
      }
    }
    const auto comp = oracles::kosaraju_scc(n, adj);
    std::vector<int> comp_size(n, 0);
    std::vector<bool> comp_self(n, false);
    for (VertexId v = 0; v < n; ++v) {
      if (!solve.winning1[v]) continue;
      ++comp_size[comp[v]];
      for (std::uint32_t t : adj[v]) comp_self[comp[v]] = comp_self[comp[v]] || comp[t] == comp[v];
    }
    for (VertexId v = 0; v < n; ++v) {
      if (!solve.winning1[v] || !set_contains(final_set, v)) continue;
      CHECK_FALSE((comp_size[comp[v]] > 1 || comp_self[comp[v]]));
    }
  }
}

TEST_CASE("min-parity games are solved through the color flip") {
  for (int round = 0; round < 60; ++round) {
    Game game = gen_random_game(8000 + round, 7, "parity", 0, 3);
    auto& par = std::get<ParityCondition>(game.condition);
    par.polarity = Polarity::MinEven;
    CHECK(solve_parity(game).winning0 == oracles::parity_winner_brute_force(game));
  }
}
