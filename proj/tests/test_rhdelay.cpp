#include <doctest.h>

#include <bit>

#include "memred/bisim.hpp"
#include "memred/pipeline.hpp"
#include "memred/rhdelay.hpp"
#include "oracles.hpp"

using namespace memred;

TEST_CASE("reward order chain and basics") {
  CHECK(reward_leq(0, 2));
  CHECK(reward_leq(4, 5));
  CHECK(reward_leq(3, 1));
  for (int m = 0; m <= 12; ++m) CHECK(reward_leq(m, m));
  CHECK_FALSE(reward_leq(1, 0));

  // 0 < 2 < 4 < ... < 12 < 11 < 9 < ... < 1, exactly.
  const std::vector<int> chain{0, 2, 4, 6, 8, 10, 12, 11, 9, 7, 5, 3, 1};
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j < chain.size(); ++j)
      CHECK(reward_leq(chain[i], chain[j]) == (i <= j));
}

TEST_CASE("reward order is total and transitive on 0..12") {
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b) {
      CHECK((reward_leq(a, b) || reward_leq(b, a)));
      if (a != b) CHECK(reward_leq(a, b) != reward_leq(b, a));
      for (int c = 0; c <= 12; ++c)
        if (reward_leq(a, b) && reward_leq(b, c)) CHECK(reward_leq(a, c));
    }
}

TEST_CASE("priority memory update follows the seven cases") {
  CHECK(pm_update(2, 3, checkmark()) == obligation(2));   // case i
  CHECK(pm_update(3, 1, obligation(5)) == obligation(1)); // case iii: 3 beats 1
  CHECK(pm_update(1, 2, obligation(3)) == checkmark());   // case vi
  CHECK(pm_update(5, 3, obligation(2)) == obligation(2)); // case iii: min{5,3,2}
  CHECK(pm_update(3, 3, obligation(1)) == obligation(1)); // case vii
  CHECK(pm_update(2, 2, obligation(2)) == checkmark());   // case v
  CHECK(pm_update(3, 5, obligation(4)) == obligation(4)); // case iv
}

TEST_CASE("exactly one case guard fires and case vii has its characterization") {
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j) {
      CHECK(std::popcount(oracles::pm_case_guards(i, j, 0, true)) == 1);
      for (int k = 0; k <= 12; ++k) {
        const unsigned fired = oracles::pm_case_guards(i, j, k, false);
        CHECK(std::popcount(fired) == 1);
        const bool vii = (fired & (1u << 6)) != 0;
        CHECK(vii == (reward_leq(j, i) && k < i && k < j));

        // The oracle's fired case determines the value independently.
        PriorityMemory expected;
        switch (std::countr_zero(fired)) {
          case 2: expected = obligation(std::min({i, j, k})); break;
          case 3: expected = obligation(k); break;
          case 4: expected = checkmark(); break;
          case 5: expected = checkmark(); break;
          default: expected = obligation(k); break;
        }
        CHECK(pm_update(i, j, obligation(k)) == expected);
      }
      const unsigned fired = oracles::pm_case_guards(i, j, 0, true);
      const PriorityMemory expected =
          fired & 1u ? obligation(std::min(i, j)) : checkmark();
      CHECK(pm_update(i, j, checkmark()) == expected);
    }
}

TEST_CASE("initial obligations follow the p_I case split") {
  CHECK(initial_priority_memory(2, 1) == obligation(1));
  CHECK(initial_priority_memory(3, 3) == checkmark());
  CHECK(initial_priority_memory(1, 0) == checkmark());
}

TEST_CASE("simulation game of a single-state automaton") {
  Game loop = oracles::make_game(1, {{0, 0}}, "1",
                                 ParityCondition{{0}, Polarity::MinEven});
  const GameAutomaton aut = game_to_automaton(trivial_simulation(loop));
  const SimGame sim = build_sim_game(aut);
  CHECK(sim.info.size() == 1);  // identical runs keep the checkmark
  const RhdeRelation rel = rhde_relation(aut);
  CHECK(rel.related(0, 0, 0));
}

TEST_CASE("simulation game requires min-parity input") {
  const Game game = gen_streett(1);
  const GameAutomaton aut = game_to_automaton(streett_to_parity(game));
  CHECK_THROWS_AS(build_sim_game(aut), polarity_error);
}

TEST_CASE("obligations thread pm_update along every simulation edge") {
  const Game game = gen_streett(1);
  const GameAutomaton aut = to_min_parity(game_to_automaton(streett_to_parity(game)));
  const SimGame sim = build_sim_game(aut);
  const auto& colors = std::get<ParityAcceptance>(aut.acceptance).colors;
  const std::uint32_t n = sim.original_vertices;
  for (VertexId id = 0; id < sim.game.arena.size(); ++id) {
    const SimGameVertex& pos = sim.info[id];
    for (VertexId tid : sim.game.arena.edges[id]) {
      const SimGameVertex& target = sim.info[tid];
      const PriorityMemory expected =
          pm_update(colors[2 + target.left * n + target.v],
                    colors[2 + target.right * n + target.v], pos.pm);
      CHECK(target.pm == expected);
    }
  }
  CHECK(sim.info.size() <= sim.size_bound);
}

TEST_CASE("duplicator wins everywhere on the streett family") {
  const Game game = gen_streett(1);
  const GameAutomaton aut = to_min_parity(game_to_automaton(streett_to_parity(game)));
  const RhdeRelation rel = rhde_relation(aut);
  for (VertexId v = 0; v < rel.vertices; ++v)
    for (MemoryId s1 = 0; s1 < rel.memory_count; ++s1)
      for (MemoryId s2 = 0; s2 < rel.memory_count; ++s2) CHECK(rel.related(v, s1, s2));
  const MemoryPartition part = memory_equivalence_parity(aut, rel);
  CHECK(part.size() == 1);
}

TEST_CASE("rhde is reflexive and implies language containment") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 25; ++round) {
    const Game game = gen_random_game(22000 + round, 5, "streett", 2);
    const GameAutomaton aut = to_min_parity(game_to_automaton(streett_to_parity(game)));
    const RhdeRelation rel = rhde_relation(aut);
    const std::uint32_t n = rel.vertices;

    for (VertexId v = 0; v < n; ++v)
      for (MemoryId s = 0; s < rel.memory_count; ++s) CHECK(rel.related(v, s, s));

    for (int sample = 0; sample < 30; ++sample) {
      const VertexId v = static_cast<VertexId>(rng() % n);
      const MemoryId s1 = static_cast<MemoryId>(rng() % rel.memory_count);
      const MemoryId s2 = static_cast<MemoryId>(rng() % rel.memory_count);
      if (!rel.related(v, s1, s2)) continue;
      const Lasso word = oracles::random_lasso(game.arena, rng);
      if (accepts(aut, word, 2 + s1 * n + v)) CHECK(accepts(aut, word, 2 + s2 * n + v));
    }
  }
}

TEST_CASE("rhde is transitive on sampled instances") {
  for (int round = 0; round < 10; ++round) {
    const Game game = gen_random_game(23000 + round, 4, "streett", 2);
    const GameAutomaton aut = to_min_parity(game_to_automaton(streett_to_parity(game)));
    const RhdeRelation rel = rhde_relation(aut);
    for (VertexId v = 0; v < rel.vertices; ++v)
      for (MemoryId a = 0; a < rel.memory_count; ++a)
        for (MemoryId b = 0; b < rel.memory_count; ++b)
          for (MemoryId c = 0; c < rel.memory_count; ++c)
            if (rel.related(v, a, b) && rel.related(v, b, c)) CHECK(rel.related(v, a, c));
  }
}

TEST_CASE("normalization compacts SCC colors to the fixed point") {
  // One SCC with colors {2,4}: 2 drops to 0, then 4 through 2 to 0.
  GameAutomaton aut;
  aut.alphabet = 1;
  aut.num_states = 2;
  aut.initial = 0;
  aut.delta = {1, 0};
  aut.acceptance = ParityAcceptance{{2, 4}, Polarity::MinEven};
  const GameAutomaton norm = normalize_colors(aut);
  CHECK(std::get<ParityAcceptance>(norm.acceptance).colors == std::vector<int>{0, 0});
  CHECK(std::get<ParityAcceptance>(norm.acceptance).colors ==
        oracles::normalize_colors_oracle(aut));

  // {1,2} is already compact: the guard fails for color 2.
  GameAutomaton stay = aut;
  stay.acceptance = ParityAcceptance{{1, 2}, Polarity::MinEven};
  CHECK(std::get<ParityAcceptance>(normalize_colors(stay).acceptance).colors ==
        std::vector<int>{1, 2});
}

TEST_CASE("normalization preserves parity per state and the language") {
  for (int round = 0; round < 60; ++round) {
    const GameAutomaton aut = gen_random_parity_automaton(24000 + round, 7, 2, 6);
    const GameAutomaton norm = normalize_colors(aut);
    const auto& before = std::get<ParityAcceptance>(aut.acceptance).colors;
    const auto& after = std::get<ParityAcceptance>(norm.acceptance).colors;
    for (StateId q = 0; q < aut.num_states; ++q) {
      CHECK(before[q] % 2 == after[q] % 2);
      CHECK(after[q] <= before[q]);
    }
    CHECK(after == oracles::normalize_colors_oracle(aut));
    CHECK(det_omega_equiv(aut, norm).equal);
  }
}
