#include "memred/automaton.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "memred/scc.hpp"

namespace memred {

MemoryPartition identity_partition(std::uint32_t num_contents) {
  MemoryPartition part;
  part.num_contents = num_contents;
  part.class_of.resize(num_contents);
  part.classes.resize(num_contents);
  part.representative.resize(num_contents);
  for (MemoryId s = 0; s < num_contents; ++s) {
    part.class_of[s] = s;
    part.classes[s] = {s};
    part.representative[s] = s;
  }
  return part;
}

MemoryPartition partition_from_class_ids(std::vector<std::uint32_t> raw) {
  // Renumber classes by their minimal member so ids follow creation order.
  MemoryPartition part;
  part.num_contents = static_cast<std::uint32_t>(raw.size());
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  part.class_of.resize(raw.size());
  for (MemoryId s = 0; s < raw.size(); ++s) {
    auto [it, inserted] = renumber.try_emplace(raw[s], static_cast<std::uint32_t>(renumber.size()));
    if (inserted) {
      part.classes.emplace_back();
      part.representative.push_back(s);
    }
    part.class_of[s] = it->second;
    part.classes[it->second].push_back(s);
  }
  return part;
}

std::string GameAutomaton::label_of(StateId q) const {
  if (is_game_automaton() && memory_of[q].second != kNoVertex)
    return "(s" + std::to_string(memory_of[q].first) + ", " +
           (letter_labels.empty() ? std::to_string(memory_of[q].second)
                                  : letter_labels[memory_of[q].second]) +
           ")";
  if (!state_labels.empty() && !state_labels[q].empty()) return state_labels[q];
  return std::to_string(q);
}

GameAutomaton game_to_automaton(const SimulatedGame& sim) {
  const std::uint32_t n = sim.original_vertices;
  const std::uint32_t mem = sim.memory_count;

  GameAutomaton aut;
  aut.alphabet = n;
  aut.num_states = 2 + mem * n;
  aut.initial = 0;
  aut.sink = 1;
  aut.delta.assign(static_cast<std::size_t>(aut.num_states) * n, 1);
  aut.owner_tag.assign(aut.num_states, Player::One);
  aut.memory_of.assign(aut.num_states, {kNoVertex, kNoVertex});
  aut.state_labels.assign(aut.num_states, "");
  aut.state_labels[0] = "q0";
  aut.state_labels[1] = "qsink";
  aut.letter_labels.resize(n);
  for (VertexId v = 0; v < n; ++v) aut.letter_labels[v] = sim.original.arena.vertices[v].label;

  auto state_of = [n](MemoryId s, VertexId v) { return 2 + s * n + v; };

  for (VertexId v = 0; v < n; ++v)
    aut.delta[static_cast<std::size_t>(0) * n + v] = state_of(sim.initial_memory, v);

  for (MemoryId s = 0; s < mem; ++s) {
    for (VertexId v = 0; v < n; ++v) {
      const StateId q = state_of(s, v);
      aut.owner_tag[q] = sim.original.arena.owner(v);
      aut.memory_of[q] = {s, v};
      aut.state_labels[q] = sim.product.arena.vertices[sim.product_vertex(s, v)].label;
      const MemoryId s2 = sim.machine->update(s, v);
      // Transitions labeled by the V-component of the target; non-edges sink.
      for (VertexId v2 : sim.original.arena.edges[v])
        aut.delta[static_cast<std::size_t>(q) * n + v2] = state_of(s2, v2);
    }
  }

  if (const auto* buchi = std::get_if<BuchiCondition>(&sim.product.condition)) {
    BuchiAcceptance acc;
    acc.final_states.assign(aut.num_states, false);
    for (VertexId pv : buchi->final_vertices) acc.final_states[2 + pv] = true;
    aut.acceptance = std::move(acc);
  } else {
    const auto& par = std::get<ParityCondition>(sim.product.condition);
    ParityAcceptance acc;
    acc.polarity = par.polarity;
    acc.colors.assign(aut.num_states, 0);
    int worst = 1;
    for (std::size_t pv = 0; pv < par.colors.size(); ++pv) {
      acc.colors[2 + pv] = par.colors[pv];
      worst = std::max(worst, par.colors[pv]);
    }
    // qsink carries the color that is worst for Player 0 under the
    // polarity: an odd maximum for MaxEven, the smallest odd for MinEven.
    const int sink_color =
        par.polarity == Polarity::MaxEven ? (worst % 2 == 1 ? worst : worst + 1) : 1;
    acc.colors[0] = acc.colors[1] = sink_color;
    aut.acceptance = std::move(acc);
  }
  return aut;
}

Game automaton_to_game(const GameAutomaton& aut) {
  if (!aut.is_game_automaton())
    throw error("automaton_to_game needs owner tags and the (s,v) projection");
  const std::uint32_t n_states = aut.num_states - 2;

  Game game;
  game.arena.vertices.resize(n_states);
  game.arena.edges.resize(n_states);
  for (StateId q = 2; q < aut.num_states; ++q) {
    Vertex& vert = game.arena.vertices[q - 2];
    vert.id = q - 2;
    vert.owner = aut.owner_tag[q];
    vert.label = aut.label_of(q);
    for (VertexId a = 0; a < aut.alphabet; ++a) {
      const StateId t = aut.next(q, a);
      if (t != aut.sink) game.arena.edges[q - 2].push_back(t - 2);
    }
  }

  if (const auto* buchi = std::get_if<BuchiAcceptance>(&aut.acceptance)) {
    BuchiCondition cond;
    for (StateId q = 2; q < aut.num_states; ++q)
      if (buchi->final_states[q]) cond.final_vertices.push_back(q - 2);
    game.condition = std::move(cond);
  } else {
    const auto& par = std::get<ParityAcceptance>(aut.acceptance);
    ParityCondition cond;
    cond.polarity = par.polarity;
    cond.colors.assign(par.colors.begin() + 2, par.colors.end());
    game.condition = std::move(cond);
  }
  return game;
}

GameAutomaton closure(const GameAutomaton& aut) {
  const auto* buchi = std::get_if<BuchiAcceptance>(&aut.acceptance);
  if (!buchi) throw wrong_condition_type_error("closure is defined on buchi automata");

  GameAutomaton out = aut;
  auto& final_states = std::get<BuchiAcceptance>(out.acceptance).final_states;

  // Counting fixpoint: a state joins F' once all its non-sink successors
  // are in F'; qsink itself never joins.
  std::vector<std::uint32_t> pending(aut.num_states, 0), non_sink(aut.num_states, 0);
  std::vector<std::vector<StateId>> pred_edges(aut.num_states);
  for (StateId q = 0; q < aut.num_states; ++q) {
    if (q == aut.sink) continue;
    for (VertexId a = 0; a < aut.alphabet; ++a) {
      const StateId t = aut.next(q, a);
      if (t == aut.sink) continue;
      ++non_sink[q];
      if (!final_states[t]) ++pending[q];
      pred_edges[t].push_back(q);
    }
  }

  // Propagate only states that newly become final; edges into the
  // original final set are already excluded from the pending counts.
  std::deque<StateId> queue;
  for (StateId q = 0; q < aut.num_states; ++q)
    if (q != aut.sink && !final_states[q] && non_sink[q] > 0 && pending[q] == 0) {
      final_states[q] = true;
      queue.push_back(q);
    }

  while (!queue.empty()) {
    const StateId t = queue.front();
    queue.pop_front();
    for (StateId p : pred_edges[t]) {
      if (p == aut.sink || final_states[p]) continue;
      if (--pending[p] == 0 && non_sink[p] > 0) {
        final_states[p] = true;
        queue.push_back(p);
      }
    }
  }
  return out;
}

GameAutomaton quotient(const GameAutomaton& aut, const MemoryPartition& part,
                       const StateEquivalence* eq) {
  if (!aut.is_game_automaton())
    throw error("quotient needs a game automaton with the (s,v) projection");
  const std::uint32_t n = aut.alphabet;
  const std::uint32_t mem = part.num_contents;
  if (2 + static_cast<std::size_t>(mem) * n != aut.num_states)
    throw incompatible_partition_error("partition does not cover the automaton's memory");

  auto state_of_old = [n](MemoryId s, VertexId v) { return 2 + s * n + v; };

  // Members of one class must be state-equivalent at every vertex.
  if (eq) {
    for (const auto& members : part.classes)
      for (VertexId v = 0; v < n; ++v)
        for (MemoryId s : members)
          if (eq->class_at[v][s] != eq->class_at[v][members.front()])
            throw incompatible_partition_error(
                "memory class merges states that are not equivalent at some vertex");
  }

  const std::uint32_t num_classes = part.size();
  GameAutomaton out;
  out.alphabet = n;
  out.num_states = 2 + num_classes * n;
  out.initial = 0;
  out.sink = 1;
  out.delta.assign(static_cast<std::size_t>(out.num_states) * n, 1);
  out.owner_tag.assign(out.num_states, Player::One);
  out.memory_of.assign(out.num_states, {kNoVertex, kNoVertex});
  out.state_labels.assign(out.num_states, "");
  out.state_labels[0] = "q0";
  out.state_labels[1] = "qsink";
  out.letter_labels = aut.letter_labels;

  auto state_of_new = [n](std::uint32_t c, VertexId v) { return 2 + c * n + v; };

  const std::uint32_t initial_class = part.class_of[aut.memory_of[aut.next(aut.initial, 0)].first];
  for (VertexId v = 0; v < n; ++v)
    out.delta[static_cast<std::size_t>(0) * n + v] = state_of_new(initial_class, v);

  const auto* in_buchi = std::get_if<BuchiAcceptance>(&aut.acceptance);
  BuchiAcceptance out_buchi;
  ParityAcceptance out_parity;
  if (in_buchi) {
    out_buchi.final_states.assign(out.num_states, false);
  } else {
    out_parity.polarity = std::get<ParityAcceptance>(aut.acceptance).polarity;
    out_parity.colors.assign(out.num_states, 0);
  }

  for (std::uint32_t c = 0; c < num_classes; ++c) {
    const auto& members = part.classes[c];
    for (VertexId v = 0; v < n; ++v) {
      const StateId q = state_of_new(c, v);
      const StateId rep_state = state_of_old(part.representative[c], v);
      out.owner_tag[q] = aut.owner_tag[rep_state];
      out.memory_of[q] = {c, v};

      // s_min: the creation-order minimum over the class's successor
      // contents; the same for every non-sink letter from (., v).
      MemoryId s_min = kNoVertex;
      for (MemoryId s : members) {
        for (VertexId a = 0; a < n; ++a) {
          const StateId t = aut.next(state_of_old(s, v), a);
          if (t == aut.sink) continue;
          s_min = std::min(s_min, aut.memory_of[t].first);
          break;  // the memory successor is letter-independent
        }
      }

      for (VertexId a = 0; a < n; ++a) {
        const StateId t = aut.next(rep_state, a);
        if (t == aut.sink) continue;
        out.delta[static_cast<std::size_t>(q) * n + a] =
            state_of_new(part.class_of[s_min], a);
      }

      if (in_buchi) {
        const bool rep_final = in_buchi->final_states[rep_state];
        for (MemoryId s : members)
          if (in_buchi->final_states[state_of_old(s, v)] != rep_final)
            throw incompatible_partition_error(
                "memory class members disagree on finality at some vertex");
        out_buchi.final_states[q] = rep_final;
      } else {
        const auto& colors = std::get<ParityAcceptance>(aut.acceptance).colors;
        int best = colors[rep_state];
        if (eq) {
          const std::uint32_t cls = eq->class_at[v][part.representative[c]];
          for (MemoryId s = 0; s < mem; ++s)
            if (eq->class_at[v][s] == cls) best = std::min(best, colors[state_of_old(s, v)]);
        } else {
          for (MemoryId s : members) best = std::min(best, colors[state_of_old(s, v)]);
        }
        out_parity.colors[q] = best;
      }
    }
  }

  if (in_buchi) {
    out.acceptance = std::move(out_buchi);
  } else {
    const auto& in_par = std::get<ParityAcceptance>(aut.acceptance);
    out_parity.colors[0] = in_par.colors[aut.initial];
    out_parity.colors[1] = in_par.colors[aut.sink];
    out.acceptance = std::move(out_parity);
  }
  return out;
}

bool accepts(const GameAutomaton& aut, const Lasso& word, std::optional<StateId> start) {
  if (word.cycle.empty()) throw empty_cycle_error();
  StateId q = start.value_or(aut.initial);
  for (VertexId a : word.prefix) q = aut.next(q, a);

  const bool buchi = aut.is_buchi();
  Polarity polarity = Polarity::MaxEven;
  if (!buchi) polarity = std::get<ParityAcceptance>(aut.acceptance).polarity;

  std::unordered_map<StateId, std::uint32_t> first_seen;
  std::vector<bool> iter_final;
  std::vector<int> iter_color;
  for (std::uint32_t iter = 0;; ++iter) {
    auto [it, inserted] = first_seen.try_emplace(q, iter);
    if (!inserted) {
      const std::uint32_t from = it->second;
      if (buchi) {
        for (std::uint32_t i = from; i < iter; ++i)
          if (iter_final[i]) return true;
        return false;
      }
      int dominant = iter_color[from];
      for (std::uint32_t i = from; i < iter; ++i)
        dominant = polarity == Polarity::MaxEven ? std::max(dominant, iter_color[i])
                                                 : std::min(dominant, iter_color[i]);
      return dominant % 2 == 0;
    }
    bool any_final = false;
    int dominant = -1;
    for (VertexId a : word.cycle) {
      q = aut.next(q, a);
      if (buchi) {
        any_final |= aut.is_final(q);
      } else {
        const int c = aut.color(q);
        dominant = dominant == -1
                       ? c
                       : (polarity == Polarity::MaxEven ? std::max(dominant, c)
                                                        : std::min(dominant, c));
      }
    }
    iter_final.push_back(any_final);
    iter_color.push_back(dominant);
  }
}

GameAutomaton to_min_parity(const GameAutomaton& aut) {
  const auto* par = std::get_if<ParityAcceptance>(&aut.acceptance);
  if (!par) throw wrong_condition_type_error("to_min_parity needs a parity automaton");
  GameAutomaton out = aut;
  auto& acc = std::get<ParityAcceptance>(out.acceptance);
  if (par->polarity == Polarity::MinEven) return out;

  int mx = 0;
  for (StateId q = 0; q < aut.num_states; ++q) {
    if (q == aut.initial || q == aut.sink) continue;
    mx = std::max(mx, par->colors[q]);
  }
  const int flip = mx % 2 == 0 ? mx : mx + 1;
  for (StateId q = 0; q < aut.num_states; ++q) acc.colors[q] = flip - par->colors[q];
  if (aut.sink != kNoState) acc.colors[aut.sink] = 1;
  if (aut.is_game_automaton()) acc.colors[aut.initial] = 1;
  acc.polarity = Polarity::MinEven;
  return out;
}

SimulatedGame simulation_from_automaton(const GameAutomaton& aut, const Game& original) {
  if (!aut.is_game_automaton())
    throw error("simulation_from_automaton needs a game automaton");
  const std::uint32_t n = aut.alphabet;
  const std::uint32_t mem = (aut.num_states - 2) / n;

  std::vector<MemoryId> table(static_cast<std::size_t>(mem) * n, 0);
  for (MemoryId s = 0; s < mem; ++s)
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId a = 0; a < n; ++a) {
        const StateId t = aut.next(2 + s * n + v, a);
        if (t == aut.sink) continue;
        table[static_cast<std::size_t>(s) * n + v] = aut.memory_of[t].first;
        break;
      }
    }

  SimulatedGame sim;
  sim.machine = std::make_shared<TableMemoryMachine>(mem, n, std::move(table));
  sim.original = original;
  sim.original_vertices = n;
  sim.memory_count = mem;
  sim.initial_memory = aut.memory_of[aut.next(aut.initial, 0)].first;
  sim.product = automaton_to_game(aut);
  sim.memory_of.assign(aut.memory_of.begin() + 2, aut.memory_of.end());
  return sim;
}

// ---------------------------------------------------------------------------
// Language equivalence

namespace {

struct MaxParityView {
  std::vector<int> colors;
};

MaxParityView max_parity_view(const GameAutomaton& aut) {
  MaxParityView view;
  view.colors.resize(aut.num_states);
  if (const auto* buchi = std::get_if<BuchiAcceptance>(&aut.acceptance)) {
    for (StateId q = 0; q < aut.num_states; ++q) view.colors[q] = buchi->final_states[q] ? 2 : 1;
    return view;
  }
  const auto& par = std::get<ParityAcceptance>(aut.acceptance);
  if (par.polarity == Polarity::MaxEven) {
    view.colors = par.colors;
    return view;
  }
  int mx = 0;
  for (int c : par.colors) mx = std::max(mx, c);
  const int flip = mx % 2 == 0 ? mx : mx + 1;
  for (StateId q = 0; q < aut.num_states; ++q) view.colors[q] = flip - par.colors[q];
  return view;
}

struct ProductGraph {
  std::vector<std::pair<StateId, StateId>> nodes;
  std::vector<std::uint32_t> parent;       // BFS tree
  std::vector<VertexId> parent_letter;
  std::vector<int> ca, cb;
  std::uint32_t alphabet = 0;
  const GameAutomaton* a = nullptr;
  const GameAutomaton* b = nullptr;
  std::unordered_map<std::uint64_t, std::uint32_t> index;

  std::uint32_t node_of(StateId qa, StateId qb) const {
    auto it = index.find((static_cast<std::uint64_t>(qa) << 32) | qb);
    return it == index.end() ? static_cast<std::uint32_t>(-1) : it->second;
  }

  template <typename Visit>
  void successors(std::uint32_t node, Visit&& visit) const {
    for (VertexId x = 0; x < alphabet; ++x) {
      const StateId ta = a->next(nodes[node].first, x);
      const StateId tb = b->next(nodes[node].second, x);
      const std::uint32_t t = node_of(ta, tb);
      visit(t, x);
    }
  }
};

ProductGraph build_product(const GameAutomaton& a, const GameAutomaton& b,
                           const MaxParityView& va, const MaxParityView& vb) {
  ProductGraph g;
  g.alphabet = a.alphabet;
  g.a = &a;
  g.b = &b;
  auto intern = [&](StateId qa, StateId qb) {
    const std::uint64_t key = (static_cast<std::uint64_t>(qa) << 32) | qb;
    auto [it, inserted] = g.index.try_emplace(key, static_cast<std::uint32_t>(g.nodes.size()));
    if (inserted) {
      g.nodes.emplace_back(qa, qb);
      g.parent.push_back(static_cast<std::uint32_t>(-1));
      g.parent_letter.push_back(0);
      g.ca.push_back(va.colors[qa]);
      g.cb.push_back(vb.colors[qb]);
    }
    return std::make_pair(it->second, inserted);
  };
  std::deque<std::uint32_t> queue;
  queue.push_back(intern(a.initial, b.initial).first);
  while (!queue.empty()) {
    const std::uint32_t node = queue.front();
    queue.pop_front();
    for (VertexId x = 0; x < g.alphabet; ++x) {
      const StateId ta = a.next(g.nodes[node].first, x);
      const StateId tb = b.next(g.nodes[node].second, x);
      auto [t, fresh] = intern(ta, tb);
      if (fresh) {
        g.parent[t] = node;
        g.parent_letter[t] = x;
        queue.push_back(t);
      }
    }
  }
  return g;
}

// Letters along a walk of length >= 1 from `from` to `to`, restricted to
// the given alive component. `from` is deliberately left unvisited so a
// closed walk is found when from == to.
std::vector<VertexId> region_walk(const ProductGraph& g, std::uint32_t from, std::uint32_t to,
                                  const std::vector<bool>& alive,
                                  const std::vector<std::uint32_t>& comp, std::uint32_t comp_id) {
  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> prev(g.nodes.size(), kNone);
  std::vector<VertexId> letter(g.nodes.size(), 0);
  std::vector<bool> visited(g.nodes.size(), false);
  std::deque<std::uint32_t> queue;

  auto in_region = [&](std::uint32_t t) {
    return t != kNone && alive[t] && comp[t] == comp_id;
  };
  auto expand = [&](std::uint32_t node, std::uint32_t via_prev) {
    g.successors(node, [&](std::uint32_t t, VertexId x) {
      if (!in_region(t) || visited[t]) return;
      visited[t] = true;
      prev[t] = via_prev;
      letter[t] = x;
      queue.push_back(t);
    });
  };

  expand(from, kNone);
  while (!visited[to] && !queue.empty()) {
    const std::uint32_t node = queue.front();
    queue.pop_front();
    if (node == to) break;
    expand(node, node);
  }
  if (!visited[to]) return {};

  std::vector<VertexId> walk;
  for (std::uint32_t cursor = to; cursor != kNone; cursor = prev[cursor])
    walk.push_back(letter[cursor]);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

bool is_witness(const GameAutomaton& a, const GameAutomaton& b, const Lasso& w) {
  return accepts(a, w) != accepts(b, w);
}

void shrink_witness(const GameAutomaton& a, const GameAutomaton& b, Lasso& w) {
  Lasso candidate = w;
  candidate.prefix.clear();
  if (is_witness(a, b, candidate)) w.prefix.clear();
  while (!w.prefix.empty()) {
    candidate = w;
    candidate.prefix.pop_back();
    if (!is_witness(a, b, candidate)) break;
    w.prefix.pop_back();
  }
  for (bool shrunk = true; shrunk && w.cycle.size() > 1;) {
    shrunk = false;
    for (std::size_t i = 0; i < w.cycle.size(); ++i) {
      candidate = w;
      candidate.cycle.erase(candidate.cycle.begin() + static_cast<std::ptrdiff_t>(i));
      if (is_witness(a, b, candidate)) {
        w = candidate;
        shrunk = true;
        break;
      }
    }
  }
}

}  // namespace

EquivalenceResult det_omega_equiv(const GameAutomaton& a, const GameAutomaton& b) {
  if (a.alphabet != b.alphabet)
    throw alphabet_mismatch_error("automata must share their alphabet");

  const MaxParityView va = max_parity_view(a);
  const MaxParityView vb = max_parity_view(b);
  ProductGraph g = build_product(a, b, va, vb);
  const std::uint32_t nodes = static_cast<std::uint32_t>(g.nodes.size());

  std::vector<int> a_colors, b_colors;
  for (std::uint32_t v = 0; v < nodes; ++v) {
    a_colors.push_back(g.ca[v]);
    b_colors.push_back(g.cb[v]);
  }
  std::sort(a_colors.begin(), a_colors.end());
  a_colors.erase(std::unique(a_colors.begin(), a_colors.end()), a_colors.end());
  std::sort(b_colors.begin(), b_colors.end());
  b_colors.erase(std::unique(b_colors.begin(), b_colors.end()), b_colors.end());

  auto succ = [&](std::uint32_t node, auto&& visit) {
    g.successors(node, [&](std::uint32_t t, VertexId) {
      if (t != static_cast<std::uint32_t>(-1)) visit(t);
    });
  };

  // A cycle whose dominant a-color is even while its dominant b-color is
  // odd (or vice versa) witnesses the language difference.
  for (int swap = 0; swap < 2; ++swap) {
    for (int alpha : a_colors) {
      if (swap == 0 ? alpha % 2 != 0 : alpha % 2 != 1) continue;
      for (int beta : b_colors) {
        if (swap == 0 ? beta % 2 != 1 : beta % 2 != 0) continue;
        std::vector<bool> alive(nodes, false);
        for (std::uint32_t v = 0; v < nodes; ++v)
          alive[v] = g.ca[v] <= alpha && g.cb[v] <= beta;
        SccDecomposition scc = tarjan_scc(nodes, succ, alive);

        std::vector<std::uint32_t> alpha_node(scc.count, static_cast<std::uint32_t>(-1));
        std::vector<std::uint32_t> beta_node(scc.count, static_cast<std::uint32_t>(-1));
        for (std::uint32_t v = 0; v < nodes; ++v) {
          if (!alive[v]) continue;
          const std::uint32_t c = scc.component[v];
          if (!scc.has_cycle[c]) continue;
          if (g.ca[v] == alpha) alpha_node[c] = v;
          if (g.cb[v] == beta) beta_node[c] = v;
        }
        for (std::uint32_t c = 0; c < scc.count; ++c) {
          if (alpha_node[c] == static_cast<std::uint32_t>(-1) ||
              beta_node[c] == static_cast<std::uint32_t>(-1))
            continue;

          EquivalenceResult res;
          res.equal = false;
          std::vector<VertexId> prefix;
          for (std::uint32_t cursor = alpha_node[c];
               g.parent[cursor] != static_cast<std::uint32_t>(-1); cursor = g.parent[cursor])
            prefix.push_back(g.parent_letter[cursor]);
          std::reverse(prefix.begin(), prefix.end());
          res.witness.prefix = std::move(prefix);

          auto leg1 =
              region_walk(g, alpha_node[c], beta_node[c], alive, scc.component, c);
          auto leg2 =
              region_walk(g, beta_node[c], alpha_node[c], alive, scc.component, c);
          res.witness.cycle = std::move(leg1);
          res.witness.cycle.insert(res.witness.cycle.end(), leg2.begin(), leg2.end());
          if (res.witness.cycle.empty() || !is_witness(a, b, res.witness)) continue;

          shrink_witness(a, b, res.witness);
          return res;
        }
      }
    }
  }
  return {};
}

std::string to_dot(const GameAutomaton& aut, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  for (StateId q = 0; q < aut.num_states; ++q) {
    std::string label = aut.label_of(q);
    if (!aut.is_buchi()) label += " c=" + std::to_string(aut.color(q));
    const bool doubled = aut.is_buchi() && aut.is_final(q);
    out << "  s" << q << " [label=\"" << label << "\""
        << (doubled ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
  for (StateId q = 0; q < aut.num_states; ++q)
    for (VertexId a = 0; a < aut.alphabet; ++a)
      out << "  s" << q << " -> s" << aut.next(q, a) << " [label=\"" << a << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace memred
