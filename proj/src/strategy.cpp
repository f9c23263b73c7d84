#include "memred/strategy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "memred/scc.hpp"

namespace memred {

MealyStrategy extract_strategy(const SimulatedGame& sim, const SolveResult& solve,
                               std::optional<VertexId> from) {
  const std::uint32_t n = sim.original_vertices;
  const std::uint32_t mem = sim.memory_count;

  if (from) {
    const VertexId pv = sim.product_vertex(sim.initial_memory, *from);
    if (!solve.winning0[pv])
      throw not_winning_error("Player 0 does not win from vertex " + std::to_string(*from));
  }

  MealyStrategy m;
  m.num_states = mem;
  m.alphabet = n;
  m.initial = sim.initial_memory;
  m.transition.resize(static_cast<std::size_t>(mem) * n);
  m.output.assign(static_cast<std::size_t>(mem) * n, kNoVertex);

  for (MemoryId s = 0; s < mem; ++s)
    for (VertexId v = 0; v < n; ++v) {
      const std::size_t slot = static_cast<std::size_t>(s) * n + v;
      m.transition[slot] = sim.machine->update(s, v);
      if (sim.original.arena.owner(v) != Player::Zero) continue;
      const VertexId pv = sim.product_vertex(s, v);
      if (!solve.winning0[pv] || solve.strategy0[pv] == kNoVertex) continue;
      m.output[slot] = sim.memory_of[solve.strategy0[pv]].second;
    }
  return m;
}

MealyStrategy positional_controller(const Game& game, const SolveResult& solve) {
  const std::uint32_t n = game.arena.size();
  MealyStrategy m;
  m.num_states = 1;
  m.alphabet = n;
  m.initial = 0;
  m.transition.assign(n, 0);
  m.output.assign(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v)
    if (game.arena.owner(v) == Player::Zero && solve.winning0[v]) m.output[v] = solve.strategy0[v];
  return m;
}

MealyStrategy minimize_mealy(const MealyStrategy& m) {
  const std::uint32_t n = m.alphabet;

  // Reachable states first.
  std::vector<std::uint32_t> order;
  std::vector<bool> seen(m.num_states, false);
  std::deque<std::uint32_t> queue{m.initial};
  seen[m.initial] = true;
  while (!queue.empty()) {
    const std::uint32_t q = queue.front();
    queue.pop_front();
    order.push_back(q);
    for (VertexId v = 0; v < n; ++v)
      if (!seen[m.next(q, v)]) {
        seen[m.next(q, v)] = true;
        queue.push_back(m.next(q, v));
      }
  }

  // Initial split by output rows, then refine by successor blocks.
  std::vector<std::uint32_t> block(m.num_states, 0);
  {
    std::map<std::vector<VertexId>, std::uint32_t> rows;
    std::vector<VertexId> row(n);
    for (std::uint32_t q : order) {
      for (VertexId v = 0; v < n; ++v) row[v] = m.move(q, v);
      block[q] = rows.try_emplace(row, static_cast<std::uint32_t>(rows.size())).first->second;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::vector<std::uint32_t>, std::uint32_t> sigs;
    std::vector<std::uint32_t> next_block(m.num_states, 0);
    std::vector<std::uint32_t> sig(n + 1);
    for (std::uint32_t q : order) {
      sig[0] = block[q];
      for (VertexId v = 0; v < n; ++v) sig[v + 1] = block[m.next(q, v)];
      next_block[q] = sigs.try_emplace(sig, static_cast<std::uint32_t>(sigs.size())).first->second;
    }
    for (std::uint32_t q : order)
      if (next_block[q] != block[q]) changed = true;
    block.swap(next_block);
    if (sigs.size() == order.size()) break;
  }

  // Renumber blocks in BFS discovery order of their first member.
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  std::vector<std::uint32_t> rep;
  for (std::uint32_t q : order) {
    auto [it, inserted] = renumber.try_emplace(block[q], static_cast<std::uint32_t>(renumber.size()));
    if (inserted) rep.push_back(q);
  }

  MealyStrategy out;
  out.num_states = static_cast<std::uint32_t>(rep.size());
  out.alphabet = n;
  out.initial = renumber.at(block[m.initial]);
  out.transition.resize(static_cast<std::size_t>(out.num_states) * n);
  out.output.resize(static_cast<std::size_t>(out.num_states) * n);
  for (std::uint32_t b = 0; b < rep.size(); ++b)
    for (VertexId v = 0; v < n; ++v) {
      out.transition[static_cast<std::size_t>(b) * n + v] = renumber.at(block[m.next(rep[b], v)]);
      out.output[static_cast<std::size_t>(b) * n + v] = m.move(rep[b], v);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

// Product of the arena with the controller (and, for request-response,
// the Buchi memory that makes the condition cycle-checkable).
struct ProductBuilder {
  const Game& game;
  const MealyStrategy& m;
  RrMemoryMachine* rr_machine;  // null unless request-response

  ProductBuilder(const Game& g, const MealyStrategy& machine, RrMemoryMachine* rr)
      : game(g), m(machine), rr_machine(rr) {}

  struct Node {
    std::uint32_t mealy;
    VertexId v;
    MemoryId mem;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<std::uint32_t> parent;
  std::unordered_map<std::uint64_t, std::uint32_t> index;

  std::uint64_t key(std::uint32_t q, VertexId v, MemoryId s) const {
    const std::uint64_t n = game.arena.size();
    return (static_cast<std::uint64_t>(s) * m.num_states + q) * n + v;
  }

  std::uint32_t intern(std::uint32_t q, VertexId v, MemoryId s) {
    auto [it, inserted] = index.try_emplace(key(q, v, s), static_cast<std::uint32_t>(nodes.size()));
    if (inserted) {
      nodes.push_back({q, v, s});
      adj.emplace_back();
      parent.push_back(static_cast<std::uint32_t>(-1));
    }
    return it->second;
  }

  void build(VertexId from) {
    std::deque<std::uint32_t> queue{intern(m.initial, from, 0)};
    std::vector<bool> expanded;
    while (!queue.empty()) {
      const std::uint32_t id = queue.front();
      queue.pop_front();
      if (expanded.size() <= id) expanded.resize(nodes.size(), false);
      if (expanded[id]) continue;
      expanded[id] = true;

      const auto node = nodes[id];
      const std::uint32_t q2 = m.next(node.mealy, node.v);
      const MemoryId s2 = rr_machine ? rr_machine->update(node.mem, node.v) : 0;

      std::vector<VertexId> moves;
      if (game.arena.owner(node.v) == Player::Zero) {
        const VertexId choice = m.move(node.mealy, node.v);
        if (choice == kNoVertex)
          throw partial_strategy_error("controller has no move at vertex " +
                                       std::to_string(node.v));
        if (!game.arena.has_edge(node.v, choice))
          throw partial_strategy_error("controller move " + std::to_string(node.v) + "->" +
                                       std::to_string(choice) + " is not an arena edge");
        moves.push_back(choice);
      } else {
        moves = game.arena.successors(node.v);
      }

      for (VertexId v2 : moves) {
        const std::uint32_t t = intern(q2, v2, s2);
        if (adj.size() <= std::max(id, t)) adj.resize(nodes.size());
        adj[id].push_back(t);
        if (parent[t] == static_cast<std::uint32_t>(-1) && t != 0) parent[t] = id;
        if (expanded.size() <= t) expanded.resize(nodes.size(), false);
        if (!expanded[t]) queue.push_back(t);
      }
    }
    adj.resize(nodes.size());
  }

  // A lasso play witnessing a cycle through `via` inside the alive region
  // of component `comp_id`.
  Lasso lasso_through(const SccDecomposition& scc, std::uint32_t comp_id, std::uint32_t via,
                      const std::vector<bool>& alive) const {
    constexpr std::uint32_t kSeed = static_cast<std::uint32_t>(-2);
    constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

    Lasso out;
    std::vector<std::uint32_t> chain;
    for (std::uint32_t cursor = via; cursor != kNone; cursor = parent[cursor])
      chain.push_back(cursor);
    std::reverse(chain.begin(), chain.end());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.prefix.push_back(nodes[chain[i]].v);

    // Closed walk via -> ... -> via; via starts unvisited so it can be
    // re-reached through at least one edge.
    std::vector<std::uint32_t> prev(nodes.size(), kNone);
    std::vector<bool> visited(nodes.size(), false);
    std::deque<std::uint32_t> queue;
    auto in_region = [&](std::uint32_t t) { return alive[t] && scc.component[t] == comp_id; };
    for (std::uint32_t t : adj[via])
      if (in_region(t) && !visited[t]) {
        visited[t] = true;
        prev[t] = kSeed;
        queue.push_back(t);
      }
    while (!visited[via] && !queue.empty()) {
      const std::uint32_t node = queue.front();
      queue.pop_front();
      for (std::uint32_t t : adj[node])
        if (in_region(t) && !visited[t]) {
          visited[t] = true;
          prev[t] = node;
          queue.push_back(t);
        }
    }

    if (!visited[via]) {
      out.cycle.push_back(nodes[via].v);
      return out;
    }

    // Forward cycle node order: via, seed, ..., last-before-via.
    std::vector<std::uint32_t> backwards;
    for (std::uint32_t cursor = prev[via]; cursor != kSeed; cursor = prev[cursor])
      backwards.push_back(cursor);
    out.cycle.push_back(nodes[via].v);
    for (auto it = backwards.rbegin(); it != backwards.rend(); ++it)
      out.cycle.push_back(nodes[*it].v);
    return out;
  }
};

}  // namespace

VerifyResult verify_strategy(const Game& game, const MealyStrategy& m, VertexId from) {
  std::unique_ptr<RrMemoryMachine> rr_machine;
  if (const auto* rr = std::get_if<RequestResponseCondition>(&game.condition))
    rr_machine = std::make_unique<RrMemoryMachine>(*rr, game.arena.size());

  ProductBuilder product(game, m, rr_machine.get());
  product.build(from);
  const std::uint32_t size = static_cast<std::uint32_t>(product.nodes.size());

  auto succ = [&](std::uint32_t node, auto&& visit) {
    for (std::uint32_t t : product.adj[node]) visit(t);
  };

  auto check_cycles = [&](const std::vector<bool>& alive,
                          auto&& is_witness_node) -> std::optional<Lasso> {
    const SccDecomposition scc = tarjan_scc(size, succ, alive);
    for (std::uint32_t node = 0; node < size; ++node) {
      if (!alive[node] || !scc.has_cycle[scc.component[node]]) continue;
      if (!is_witness_node(node)) continue;
      return product.lasso_through(scc, scc.component[node], node, alive);
    }
    return std::nullopt;
  };

  std::optional<Lasso> violation;

  if (rr_machine) {
    // No reachable cycle may avoid the wrap flag.
    std::vector<bool> alive(size, false);
    for (std::uint32_t node = 0; node < size; ++node)
      alive[node] = !rr_machine->is_final(product.nodes[node].mem);
    violation = check_cycles(alive, [](std::uint32_t) { return true; });
  } else if (const auto* buchi = std::get_if<BuchiCondition>(&game.condition)) {
    std::vector<bool> alive(size, false);
    for (std::uint32_t node = 0; node < size; ++node)
      alive[node] = !set_contains(buchi->final_vertices, product.nodes[node].v);
    violation = check_cycles(alive, [](std::uint32_t) { return true; });
  } else if (const auto* streett = std::get_if<StreettCondition>(&game.condition)) {
    for (const auto& pair : streett->pairs) {
      std::vector<bool> alive(size, false);
      for (std::uint32_t node = 0; node < size; ++node)
        alive[node] = !set_contains(pair.e_set, product.nodes[node].v);
      violation = check_cycles(alive, [&](std::uint32_t node) {
        return set_contains(pair.f_set, product.nodes[node].v);
      });
      if (violation) break;
    }
  } else {
    const auto& par = std::get<ParityCondition>(game.condition);
    std::vector<int> used;
    for (std::uint32_t node = 0; node < size; ++node)
      used.push_back(par.colors[product.nodes[node].v]);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int alpha : used) {
      if (alpha % 2 == 0) continue;
      std::vector<bool> alive(size, false);
      for (std::uint32_t node = 0; node < size; ++node) {
        const int c = par.colors[product.nodes[node].v];
        alive[node] = par.polarity == Polarity::MaxEven ? c <= alpha : c >= alpha;
      }
      violation = check_cycles(alive, [&](std::uint32_t node) {
        return par.colors[product.nodes[node].v] == alpha;
      });
      if (violation) break;
    }
  }

  VerifyResult res;
  if (violation) {
    res.ok = false;
    res.counterexample = std::move(*violation);
  }
  return res;
}

std::string controller_to_json(const MealyStrategy& m) {
  nlohmann::json doc;
  doc["states"] = m.num_states;
  doc["initial"] = m.initial;
  doc["alphabet"] = m.alphabet;
  doc["transitions"] = nlohmann::json::array();
  doc["outputs"] = nlohmann::json::array();
  for (std::uint32_t q = 0; q < m.num_states; ++q)
    for (VertexId v = 0; v < m.alphabet; ++v) {
      doc["transitions"].push_back({q, v, m.next(q, v)});
      if (m.move(q, v) != kNoVertex) doc["outputs"].push_back({q, v, m.move(q, v)});
    }
  return doc.dump(2) + "\n";
}

std::string controller_to_dot(const MealyStrategy& m, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  for (std::uint32_t q = 0; q < m.num_states; ++q)
    out << "  m" << q << " [label=\"" << q << "\", shape=" << (q == m.initial ? "box" : "circle")
        << "];\n";
  for (std::uint32_t q = 0; q < m.num_states; ++q)
    for (VertexId v = 0; v < m.alphabet; ++v) {
      out << "  m" << q << " -> m" << m.next(q, v) << " [label=\"" << v;
      if (m.move(q, v) != kNoVertex) out << "/" << m.move(q, v);
      out << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace memred
