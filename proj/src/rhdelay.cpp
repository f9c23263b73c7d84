#include "memred/rhdelay.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "memred/scc.hpp"
#include "memred/solvers.hpp"

namespace memred {

bool reward_leq(int m, int n) {
  const bool m_even = m % 2 == 0, n_even = n % 2 == 0;
  if (m_even && !n_even) return true;
  if (m_even && n_even) return m <= n;
  if (!m_even && !n_even) return n <= m;
  return false;
}

bool reward_less(int m, int n) { return m != n && reward_leq(m, n); }

PriorityMemory pm_update(int i, int j, PriorityMemory k) {
  if (k.is_checkmark()) {
    if (reward_less(i, j)) return obligation(std::min(i, j));  // case i
    return checkmark();                                        // case ii: j <= i
  }
  const int kc = k.value;
  if (reward_less(i, j)) return obligation(std::min({i, j, kc}));        // case iii
  if (i % 2 == 1 && i <= kc && (j % 2 == 1 || kc < j)) return obligation(kc);  // case iv
  if (j % 2 == 0 && j <= kc && (i % 2 == 0 || kc < i)) return checkmark();     // case v
  if (i % 2 == 1 && j % 2 == 0 && i <= kc && j <= kc) return checkmark();      // case vi
  return obligation(kc);  // case vii: j <= i, k < i and k < j
}

PriorityMemory initial_priority_memory(int i, int j) {
  if (reward_less(i, j)) return obligation(std::min(i, j));
  return checkmark();
}

// ---------------------------------------------------------------------------
// Simulation game

namespace {

std::uint64_t position_key(MemoryId left, MemoryId right, VertexId v, PriorityMemory pm,
                           std::uint32_t mem, std::uint32_t n) {
  std::uint64_t key = (static_cast<std::uint64_t>(left) * mem + right) * n + v;
  return key * 64 + static_cast<std::uint64_t>(pm.value + 1);
}

}  // namespace

VertexId SimGame::position(MemoryId left, MemoryId right, VertexId v, PriorityMemory pm) const {
  auto it = index.find(position_key(left, right, v, pm, memory_count, original_vertices));
  return it == index.end() ? kNoVertex : it->second;
}

SimGame build_sim_game(const GameAutomaton& aut) {
  const auto* par = std::get_if<ParityAcceptance>(&aut.acceptance);
  if (!par) throw wrong_condition_type_error("build_sim_game needs a parity automaton");
  if (par->polarity != Polarity::MinEven)
    throw polarity_error("build_sim_game expects the min-parity coloring");
  if (!aut.is_game_automaton()) throw error("build_sim_game needs a game automaton");

  const std::uint32_t n = aut.alphabet;
  const std::uint32_t mem = (aut.num_states - 2) / n;
  if (par->colors.size() != aut.num_states) throw error("coloring does not cover the automaton");

  SimGame sim;
  sim.memory_count = mem;
  sim.original_vertices = n;

  auto state_of = [n](MemoryId s, VertexId v) { return 2 + s * n + v; };
  auto color_of = [&](MemoryId s, VertexId v) { return par->colors[state_of(s, v)]; };

  int distinct_colors = 0;
  {
    std::vector<int> used;
    for (MemoryId s = 0; s < mem; ++s)
      for (VertexId v = 0; v < n; ++v) used.push_back(color_of(s, v));
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    distinct_colors = static_cast<int>(used.size());
  }
  sim.size_bound = static_cast<std::size_t>(n) * mem * mem *
                   static_cast<std::size_t>(distinct_colors + 1);

  auto intern = [&](MemoryId l, MemoryId r, VertexId v, PriorityMemory pm) {
    const std::uint64_t key = position_key(l, r, v, pm, mem, n);
    auto [it, inserted] = sim.index.try_emplace(key, static_cast<VertexId>(sim.info.size()));
    if (inserted) sim.info.push_back({l, r, v, pm});
    return std::make_pair(it->second, inserted);
  };

  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v)
    for (MemoryId l = 0; l < mem; ++l)
      for (MemoryId r = 0; r < mem; ++r) {
        auto [id, fresh] =
            intern(l, r, v, initial_priority_memory(color_of(l, v), color_of(r, v)));
        if (fresh) queue.push_back(id);
      }

  std::vector<std::vector<VertexId>> edges;
  while (!queue.empty()) {
    const VertexId id = queue.front();
    queue.pop_front();
    if (edges.size() <= id) edges.resize(sim.info.size());
    const SimGameVertex pos = sim.info[id];
    const StateId left_state = state_of(pos.left, pos.v);
    const StateId right_state = state_of(pos.right, pos.v);
    for (VertexId v2 = 0; v2 < n; ++v2) {
      const StateId t_left = aut.next(left_state, v2);
      if (t_left == aut.sink) continue;  // Spoiler moves along play edges only
      const StateId t_right = aut.next(right_state, v2);
      const MemoryId l2 = aut.memory_of[t_left].first;
      const MemoryId r2 = aut.memory_of[t_right].first;
      const PriorityMemory pm2 = pm_update(color_of(l2, v2), color_of(r2, v2), pos.pm);
      auto [tid, fresh] = intern(l2, r2, v2, pm2);
      if (fresh) queue.push_back(tid);
      if (edges.size() <= std::max(id, tid)) edges.resize(sim.info.size());
      edges[id].push_back(tid);
    }
  }
  edges.resize(sim.info.size());

  Arena& arena = sim.game.arena;
  arena.vertices.resize(sim.info.size());
  arena.edges = std::move(edges);
  BuchiCondition cond;
  for (VertexId id = 0; id < sim.info.size(); ++id) {
    arena.vertices[id].id = id;
    arena.vertices[id].owner = Player::One;  // every position is Spoiler's
    if (sim.info[id].pm.is_checkmark()) cond.final_vertices.push_back(id);
  }
  sim.game.condition = std::move(cond);
  return sim;
}

RhdeRelation rhde_relation(const GameAutomaton& aut) {
  SimGame sim = build_sim_game(aut);
  const SolveResult solve = solve_buchi(sim.game);

  RhdeRelation rel;
  rel.memory_count = sim.memory_count;
  rel.vertices = sim.original_vertices;
  rel.sim_vertices = sim.info.size();
  rel.sim_bound = sim.size_bound;
  rel.leq.assign(rel.vertices,
                 std::vector<bool>(static_cast<std::size_t>(rel.memory_count) * rel.memory_count,
                                   false));

  const auto* par = &std::get<ParityAcceptance>(aut.acceptance);
  auto color_of = [&](MemoryId s, VertexId v) {
    return par->colors[2 + s * rel.vertices + v];
  };
  for (VertexId v = 0; v < rel.vertices; ++v)
    for (MemoryId s1 = 0; s1 < rel.memory_count; ++s1)
      for (MemoryId s2 = 0; s2 < rel.memory_count; ++s2) {
        const VertexId pos =
            sim.position(s1, s2, v, initial_priority_memory(color_of(s1, v), color_of(s2, v)));
        rel.leq[v][static_cast<std::size_t>(s1) * rel.memory_count + s2] =
            pos != kNoVertex && solve.winning0[pos];
      }
  return rel;
}

StateEquivalence state_equivalence_from_rhde(const RhdeRelation& rel) {
  StateEquivalence eq;
  eq.class_at.assign(rel.vertices, std::vector<std::uint32_t>(rel.memory_count));
  for (VertexId v = 0; v < rel.vertices; ++v) {
    std::vector<MemoryId> reps;
    for (MemoryId s = 0; s < rel.memory_count; ++s) {
      std::uint32_t cls = kNoVertex;
      for (std::uint32_t c = 0; c < reps.size(); ++c)
        if (rel.equivalent(v, s, reps[c])) {
          cls = c;
          break;
        }
      if (cls == kNoVertex) {
        cls = static_cast<std::uint32_t>(reps.size());
        reps.push_back(s);
      }
      eq.class_at[v][s] = cls;
    }
  }
  return eq;
}

MemoryPartition memory_equivalence_parity(const GameAutomaton& aut, const RhdeRelation& rel) {
  if (!aut.is_game_automaton())
    throw error("memory_equivalence_parity needs a game automaton");
  const StateEquivalence eq = state_equivalence_from_rhde(rel);
  std::map<std::vector<std::uint32_t>, std::uint32_t> groups;
  std::vector<std::uint32_t> raw(rel.memory_count);
  std::vector<std::uint32_t> signature(rel.vertices);
  for (MemoryId s = 0; s < rel.memory_count; ++s) {
    for (VertexId v = 0; v < rel.vertices; ++v) signature[v] = eq.class_at[v][s];
    raw[s] = groups.try_emplace(signature, static_cast<std::uint32_t>(groups.size())).first->second;
  }
  return partition_from_class_ids(std::move(raw));
}

GameAutomaton normalize_colors(const GameAutomaton& aut) {
  const auto* par = std::get_if<ParityAcceptance>(&aut.acceptance);
  if (!par) throw wrong_condition_type_error("normalize_colors needs a parity automaton");
  if (par->polarity != Polarity::MinEven)
    throw polarity_error("normalize_colors expects the min-parity coloring");

  GameAutomaton out = aut;
  auto& colors = std::get<ParityAcceptance>(out.acceptance).colors;

  auto succ = [&](std::uint32_t q, auto&& visit) {
    for (VertexId a = 0; a < aut.alphabet; ++a) visit(aut.next(q, a));
  };
  const SccDecomposition scc = tarjan_scc(aut.num_states, succ);

  std::vector<std::vector<StateId>> members(scc.count);
  for (StateId q = 0; q < aut.num_states; ++q) members[scc.component[q]].push_back(q);

  int max_color = 0;
  for (int c : colors) max_color = std::max(max_color, c);

  for (const auto& comp : members) {
    std::vector<std::uint32_t> count(static_cast<std::size_t>(max_color) + 1, 0);
    for (StateId q : comp) ++count[colors[q]];
    for (bool changed = true; changed;) {
      changed = false;
      for (StateId q : comp) {
        if (q == aut.sink || (aut.is_game_automaton() && q == aut.initial)) continue;
        while (colors[q] >= 2 && count[colors[q] - 1] == 0) {
          --count[colors[q]];
          colors[q] -= 2;
          ++count[colors[q]];
          changed = true;
        }
      }
    }
  }
  return out;
}

}  // namespace memred
