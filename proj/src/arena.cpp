#include "memred/arena.hpp"

#include <algorithm>

namespace memred {

bool Arena::has_edge(VertexId u, VertexId v) const {
  const auto& out = edges[u];
  return std::find(out.begin(), out.end(), v) != out.end();
}

bool set_contains(const VertexSet& set, VertexId v) {
  return std::binary_search(set.begin(), set.end(), v);
}

VertexSet make_vertex_set(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

const char* condition_name(const WinningCondition& c) {
  switch (c.index()) {
    case 0: return "rr";
    case 1: return "streett";
    case 2: return "buchi";
    default: return "parity";
  }
}

namespace {

void check_set(const VertexSet& set, std::uint32_t n, const char* what) {
  VertexId prev = kNoVertex;
  for (VertexId v : set) {
    if (v >= n)
      throw bad_reference_error(std::string(what) + " references vertex " +
                                std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    if (prev != kNoVertex && v <= prev)
      throw validation_error(std::string(what) + " is not a sorted set");
    prev = v;
  }
}

}  // namespace

void validate(const Game& game) {
  const Arena& a = game.arena;
  const std::uint32_t n = a.size();
  if (n == 0) throw validation_error("arena has no vertices");
  if (a.edges.size() != n) throw validation_error("adjacency size differs from vertex count");
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a.vertices[i].id != i)
      throw validation_error("vertex ids are not contiguous 0..|V|-1");
    if (a.edges[i].empty()) throw dead_vertex_error(i);
    for (VertexId t : a.edges[i])
      if (t >= n)
        throw bad_reference_error("edge (" + std::to_string(i) + "," + std::to_string(t) +
                                  ") leaves the vertex range");
  }

  if (const auto* rr = std::get_if<RequestResponseCondition>(&game.condition)) {
    if (rr->pairs.empty()) throw validation_error("request-response condition needs at least one pair");
    for (const auto& p : rr->pairs) {
      check_set(p.request, n, "request set");
      check_set(p.response, n, "response set");
    }
  } else if (const auto* st = std::get_if<StreettCondition>(&game.condition)) {
    if (st->pairs.empty()) throw validation_error("streett condition needs at least one pair");
    for (const auto& p : st->pairs) {
      check_set(p.e_set, n, "streett E set");
      check_set(p.f_set, n, "streett F set");
    }
  } else if (const auto* b = std::get_if<BuchiCondition>(&game.condition)) {
    check_set(b->final_vertices, n, "final set");
  } else {
    const auto& par = std::get<ParityCondition>(game.condition);
    if (par.colors.size() != n)
      throw validation_error("parity coloring must assign every vertex a color");
    for (int c : par.colors)
      if (c < 0) throw validation_error("parity colors must be non-negative");
  }
}

namespace {

bool rr_lasso_satisfies(const std::vector<RrPair>& pairs, const Lasso& lasso) {
  // A request inside the cycle needs a response somewhere in the cycle
  // (responses recur, so position does not matter). A prefix request needs
  // a response later in the prefix or anywhere in the cycle.
  for (const auto& pair : pairs) {
    bool cycle_has_response = false;
    bool cycle_has_request = false;
    for (VertexId v : lasso.cycle) {
      cycle_has_response |= set_contains(pair.response, v);
      cycle_has_request |= set_contains(pair.request, v);
    }
    if (cycle_has_request && !cycle_has_response) return false;
    if (cycle_has_response) continue;  // every prefix request is answered by the cycle
    for (std::size_t i = 0; i < lasso.prefix.size(); ++i) {
      if (!set_contains(pair.request, lasso.prefix[i])) continue;
      bool answered = false;
      for (std::size_t j = i; j < lasso.prefix.size() && !answered; ++j)
        answered = set_contains(pair.response, lasso.prefix[j]);
      if (!answered) return false;
    }
  }
  return true;
}

}  // namespace

bool play_satisfies(const WinningCondition& condition, const Lasso& lasso) {
  if (lasso.cycle.empty()) throw empty_cycle_error();

  if (const auto* rr = std::get_if<RequestResponseCondition>(&condition))
    return rr_lasso_satisfies(rr->pairs, lasso);

  if (const auto* st = std::get_if<StreettCondition>(&condition)) {
    for (const auto& pair : st->pairs) {
      bool sees_f = false, sees_e = false;
      for (VertexId v : lasso.cycle) {
        sees_f |= set_contains(pair.f_set, v);
        sees_e |= set_contains(pair.e_set, v);
      }
      if (sees_f && !sees_e) return false;
    }
    return true;
  }

  if (const auto* b = std::get_if<BuchiCondition>(&condition)) {
    for (VertexId v : lasso.cycle)
      if (set_contains(b->final_vertices, v)) return true;
    return false;
  }

  const auto& par = std::get<ParityCondition>(condition);
  int dominant = par.colors[lasso.cycle.front()];
  for (VertexId v : lasso.cycle) {
    int c = par.colors[v];
    if (par.polarity == Polarity::MaxEven ? c > dominant : c < dominant) dominant = c;
  }
  return dominant % 2 == 0;
}

std::vector<std::uint64_t> membership_masks(const std::vector<const VertexSet*>& sets,
                                            std::uint32_t num_vertices) {
  if (sets.size() > 62) throw validation_error("at most 62 condition pairs are supported");
  std::vector<std::uint64_t> masks(num_vertices, 0);
  for (std::size_t j = 0; j < sets.size(); ++j)
    for (VertexId v : *sets[j]) masks[v] |= std::uint64_t{1} << j;
  return masks;
}

}  // namespace memred
