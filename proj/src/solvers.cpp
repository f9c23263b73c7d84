#include "memred/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>

namespace memred {

namespace {

std::vector<std::vector<VertexId>> predecessors(const Arena& arena) {
  std::vector<std::vector<VertexId>> pred(arena.size());
  for (VertexId u = 0; u < arena.size(); ++u)
    for (VertexId v : arena.edges[u]) pred[v].push_back(u);
  return pred;
}

}  // namespace

AttractorResult attractor(const Arena& arena, Player player, const std::vector<bool>& target,
                          const std::vector<bool>& alive) {
  const std::uint32_t n = arena.size();
  const auto pred = predecessors(arena);
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  AttractorResult res;
  res.in_attractor.assign(n, false);
  res.strategy.assign(n, kNoVertex);
  res.rank.assign(n, kInf);

  auto is_alive = [&](VertexId v) { return alive.empty() || alive[v]; };

  // Opponent vertices fall in once every live successor does.
  std::vector<std::uint32_t> escape_count(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (!is_alive(v) || arena.owner(v) == player) continue;
    for (VertexId t : arena.edges[v])
      if (is_alive(t)) ++escape_count[v];
  }

  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (is_alive(v) && target[v]) {
      res.in_attractor[v] = true;
      res.rank[v] = 0;
      queue.push_back(v);
    }
  }

  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : pred[v]) {
      if (!is_alive(u) || res.in_attractor[u]) continue;
      if (arena.owner(u) == player) {
        res.in_attractor[u] = true;
        res.rank[u] = res.rank[v] + 1;
        queue.push_back(u);
      } else if (--escape_count[u] == 0) {
        res.in_attractor[u] = true;
        res.rank[u] = res.rank[v] + 1;
        queue.push_back(u);
      }
    }
  }

  // Rank-minimal successor, ties broken towards the smallest id; this is
  // the "reach the target as soon as possible" strategy.
  for (VertexId v = 0; v < n; ++v) {
    if (!is_alive(v) || !res.in_attractor[v] || res.rank[v] == 0) continue;
    if (arena.owner(v) != player) continue;
    VertexId best = kNoVertex;
    for (VertexId t : arena.edges[v]) {
      if (!is_alive(t) || !res.in_attractor[t]) continue;
      if (best == kNoVertex || res.rank[t] < res.rank[best] ||
          (res.rank[t] == res.rank[best] && t < best))
        best = t;
    }
    res.strategy[v] = best;
  }
  return res;
}

AttractorResult attractor(const Arena& arena, Player player, const std::vector<bool>& target) {
  return attractor(arena, player, target, {});
}

SolveResult solve_buchi(const Game& game) {
  const auto* cond = std::get_if<BuchiCondition>(&game.condition);
  if (!cond) throw wrong_condition_type_error("solve_buchi needs a buchi condition");
  const Arena& arena = game.arena;
  const std::uint32_t n = arena.size();

  std::vector<bool> final_set(n, false);
  for (VertexId v : cond->final_vertices) final_set[v] = true;

  auto cpre0 = [&](const std::vector<bool>& s, VertexId v) {
    if (arena.owner(v) == Player::Zero) {
      for (VertexId t : arena.edges[v])
        if (s[t]) return true;
      return false;
    }
    for (VertexId t : arena.edges[v])
      if (!s[t]) return false;
    return true;
  };

  // Recur0(F): greatest X <= F from which Player 0 forces a revisit to X.
  std::vector<bool> recur = final_set;
  AttractorResult attr;
  for (;;) {
    attr = attractor(arena, Player::Zero, recur);
    std::vector<bool> next(n, false);
    bool changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (!recur[v]) continue;
      if (cpre0(attr.in_attractor, v))
        next[v] = true;
      else
        changed = true;
    }
    if (!changed) break;
    recur.swap(next);
  }

  SolveResult res;
  res.winning0 = attr.in_attractor;
  res.winning1.assign(n, false);
  for (VertexId v = 0; v < n; ++v) res.winning1[v] = !res.winning0[v];
  res.strategy0 = attr.strategy;
  res.strategy1.assign(n, kNoVertex);

  // Inside Recur0(F) the attractor strategy is undefined (rank 0); force
  // the revisit through the rank-minimal successor in the attractor.
  for (VertexId v = 0; v < n; ++v) {
    if (!recur[v] || arena.owner(v) != Player::Zero) continue;
    VertexId best = kNoVertex;
    for (VertexId t : arena.edges[v]) {
      if (!attr.in_attractor[t]) continue;
      if (best == kNoVertex || attr.rank[t] < attr.rank[best] ||
          (attr.rank[t] == attr.rank[best] && t < best))
        best = t;
    }
    res.strategy0[v] = best;
  }

  // Player 1 wins co-Buchi by layers: peel the region where F is avoidable
  // forever (the complement of Attr0(F) in the remaining subgame) together
  // with its Player-1 attractor. Player 0 can only fall back into earlier
  // layers, so every play eventually settles inside one F-free core.
  std::vector<bool> alive(n, true);
  std::vector<bool> peeled(n, false);
  for (;;) {
    std::vector<bool> live_final(n, false);
    for (VertexId v = 0; v < n; ++v) live_final[v] = alive[v] && final_set[v];
    const AttractorResult to_final = attractor(arena, Player::Zero, live_final, alive);

    std::vector<bool> core(n, false);
    bool core_empty = true;
    for (VertexId v = 0; v < n; ++v) {
      core[v] = alive[v] && !to_final.in_attractor[v];
      core_empty &= !core[v];
    }
    if (core_empty) break;

    const AttractorResult pull = attractor(arena, Player::One, core, alive);
    for (VertexId v = 0; v < n; ++v) {
      if (!alive[v] || !pull.in_attractor[v]) continue;
      peeled[v] = true;
      alive[v] = false;
      if (arena.owner(v) != Player::One) continue;
      if (core[v]) {
        VertexId best = kNoVertex;
        for (VertexId t : arena.edges[v])
          if (core[t] && (best == kNoVertex || t < best)) best = t;
        res.strategy1[v] = best;
      } else {
        res.strategy1[v] = pull.strategy[v];
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) assert(peeled[v] == res.winning1[v]);
  return res;
}

namespace {

struct ZielonkaSolver {
  const Arena& arena;
  const std::vector<int>& colors;
  SolveResult result;

  explicit ZielonkaSolver(const Arena& a, const std::vector<int>& c) : arena(a), colors(c) {
    const std::uint32_t n = a.size();
    result.winning0.assign(n, false);
    result.winning1.assign(n, false);
    result.strategy0.assign(n, kNoVertex);
    result.strategy1.assign(n, kNoVertex);
  }

  std::vector<VertexId>& strategy_of(Player p) {
    return p == Player::Zero ? result.strategy0 : result.strategy1;
  }
  std::vector<bool>& region_of(Player p) {
    return p == Player::Zero ? result.winning0 : result.winning1;
  }

  void solve(std::vector<bool> alive, std::size_t alive_count) {
    if (alive_count == 0) return;
    const std::uint32_t n = arena.size();

    int top = -1;
    for (VertexId v = 0; v < n; ++v)
      if (alive[v]) top = std::max(top, colors[v]);
    const Player sigma = top % 2 == 0 ? Player::Zero : Player::One;
    const Player tau = opponent(sigma);

    std::vector<bool> dominion(n, false);
    for (VertexId v = 0; v < n; ++v) dominion[v] = alive[v] && colors[v] == top;

    AttractorResult head = attractor(arena, sigma, dominion, alive);

    std::vector<bool> rest = alive;
    std::size_t rest_count = alive_count;
    for (VertexId v = 0; v < n; ++v)
      if (alive[v] && head.in_attractor[v]) {
        rest[v] = false;
        --rest_count;
      }

    solve(rest, rest_count);

    bool opponent_wins_rest = false;
    for (VertexId v = 0; v < n; ++v)
      if (rest[v] && region_of(tau)[v]) opponent_wins_rest = true;

    if (!opponent_wins_rest) {
      // sigma wins the whole subgame: attractor moves towards the top
      // color, any in-subgame move on the top vertices themselves.
      auto& reg = region_of(sigma);
      auto& strat = strategy_of(sigma);
      for (VertexId v = 0; v < n; ++v) {
        if (!alive[v] || !head.in_attractor[v]) continue;
        reg[v] = true;
        if (arena.owner(v) != sigma) continue;
        if (head.rank[v] > 0) {
          strat[v] = head.strategy[v];
        } else {
          VertexId best = kNoVertex;
          for (VertexId t : arena.edges[v])
            if (alive[t] && (best == kNoVertex || t < best)) best = t;
          strat[v] = best;
        }
      }
      return;
    }

    // The opponent's sub-region grows by its attractor; resolve the rest.
    std::vector<bool> opp_region(n, false);
    for (VertexId v = 0; v < n; ++v) opp_region[v] = rest[v] && region_of(tau)[v];
    AttractorResult pull = attractor(arena, tau, opp_region, alive);

    // Clear the tentative sub-results before re-solving the remainder.
    for (VertexId v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (pull.in_attractor[v]) {
        if (arena.owner(v) == tau && pull.rank[v] > 0) strategy_of(tau)[v] = pull.strategy[v];
        region_of(tau)[v] = true;
        region_of(sigma)[v] = false;
        strategy_of(sigma)[v] = kNoVertex;
      } else {
        result.winning0[v] = result.winning1[v] = false;
        result.strategy0[v] = result.strategy1[v] = kNoVertex;
      }
    }

    std::vector<bool> remainder = alive;
    std::size_t remainder_count = alive_count;
    for (VertexId v = 0; v < n; ++v)
      if (alive[v] && pull.in_attractor[v]) {
        remainder[v] = false;
        --remainder_count;
      }
    solve(remainder, remainder_count);
  }
};

}  // namespace

SolveResult solve_parity(const Game& game) {
  const auto* cond = std::get_if<ParityCondition>(&game.condition);
  if (!cond) throw wrong_condition_type_error("solve_parity needs a parity condition");
  const std::uint32_t n = game.arena.size();

  std::vector<int> colors = cond->colors;
  if (cond->polarity == Polarity::MinEven) {
    int mx = 0;
    for (int c : colors) mx = std::max(mx, c);
    const int flip = mx % 2 == 0 ? mx : mx + 1;
    for (int& c : colors) c = flip - c;
  }

  ZielonkaSolver solver(game.arena, colors);
  std::vector<bool> alive(n, true);
  solver.solve(std::move(alive), n);
  return std::move(solver.result);
}

SolveResult solve_game(const Game& game) {
  if (std::holds_alternative<BuchiCondition>(game.condition)) return solve_buchi(game);
  if (std::holds_alternative<ParityCondition>(game.condition)) return solve_parity(game);
  throw wrong_condition_type_error(
      "rr and streett games are solved through their game simulations");
}

}  // namespace memred
