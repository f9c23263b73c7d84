#include "memred/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace memred {

RrMemory rr_memory_update(const RrMemory& mem, std::uint32_t pair_count,
                          std::uint64_t request_mask, std::uint64_t response_mask) {
  assert(pair_count >= 1 && mem.marker >= 1 && mem.marker <= pair_count);
  RrMemory next;
  next.open = (mem.open | request_mask) & ~response_mask;
  const bool marker_open = (next.open >> (mem.marker - 1)) & 1;
  next.marker = marker_open ? mem.marker : (mem.marker % pair_count) + 1;
  // The flag records an actual wrap: marker k advanced past the end. The
  // literal "i=k and i'=1" also fires for k=1 with request 1 still open;
  // the wrap reading keeps the flag tied to a completed sweep.
  next.flag = mem.marker == pair_count && !((next.open >> (pair_count - 1)) & 1);
  return next;
}

IarRecord iar_update(const IarRecord& rec, std::uint64_t e_mask, std::uint64_t f_mask) {
  const std::size_t m = rec.perm.size();
  IarRecord next;
  next.perm.reserve(m);

  std::uint8_t e_pos = 0;
  for (std::size_t l = 0; l < m; ++l)
    if ((e_mask >> (rec.perm[l] - 1)) & 1) {
      next.perm.push_back(rec.perm[l]);
      e_pos = static_cast<std::uint8_t>(l + 1);
    }
  for (std::size_t l = 0; l < m; ++l)
    if (!((e_mask >> (rec.perm[l] - 1)) & 1)) next.perm.push_back(rec.perm[l]);

  std::uint8_t f_pos = 0;
  for (std::size_t l = 0; l < m; ++l)
    if ((f_mask >> (next.perm[l] - 1)) & 1) f_pos = static_cast<std::uint8_t>(l + 1);

  assert(e_pos >= 1 && f_pos >= 1 && "the convention E_m = F_m = V must be in force");
  next.e = e_pos;
  next.f = f_pos;
  return next;
}

int iar_color(const IarRecord& rec) { return rec.e >= rec.f ? 2 * rec.e : 2 * rec.f - 1; }

// ---------------------------------------------------------------------------
// Request-response memory machine

namespace {

std::uint64_t rr_key(const RrMemory& mem) {
  return mem.open | (static_cast<std::uint64_t>(mem.marker) << 56) |
         (static_cast<std::uint64_t>(mem.flag) << 63);
}

}  // namespace

RrMemoryMachine::RrMemoryMachine(const RequestResponseCondition& cond,
                                 std::uint32_t num_vertices)
    : pair_count_(static_cast<std::uint32_t>(cond.pairs.size())) {
  if (pair_count_ == 0 || pair_count_ > 56)
    throw wrong_condition_type_error("request-response expansion supports 1..56 pairs");
  std::vector<const VertexSet*> requests, responses;
  for (const auto& p : cond.pairs) {
    requests.push_back(&p.request);
    responses.push_back(&p.response);
  }
  request_masks_ = membership_masks(requests, num_vertices);
  response_masks_ = membership_masks(responses, num_vertices);
  intern(RrMemory{});  // s0 = (emptyset, 1, 0)
}

MemoryId RrMemoryMachine::intern(const RrMemory& mem) {
  auto [it, inserted] = index_.try_emplace(rr_key(mem), count());
  if (inserted) {
    contents_.push_back(mem);
    successor_cache_.emplace_back(request_masks_.size(), kNoVertex);
  }
  return it->second;
}

MemoryId RrMemoryMachine::update(MemoryId s, VertexId v) {
  MemoryId& slot = successor_cache_[s][v];
  if (slot == kNoVertex)
    slot = intern(rr_memory_update(contents_[s], pair_count_, request_masks_[v],
                                   response_masks_[v]));
  return slot;
}

std::string RrMemoryMachine::label(MemoryId s) const {
  const RrMemory& mem = contents_[s];
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::uint32_t j = 1; j <= pair_count_; ++j)
    if ((mem.open >> (j - 1)) & 1) {
      if (!first) out << ',';
      out << j;
      first = false;
    }
  out << "}," << mem.marker << ',' << (mem.flag ? 1 : 0);
  return out.str();
}

void RrMemoryMachine::materialize_all() {
  for (std::uint64_t open = 0; open < (std::uint64_t{1} << pair_count_); ++open)
    for (std::uint32_t marker = 1; marker <= pair_count_; ++marker)
      for (int flag = 0; flag <= 1; ++flag)
        intern(RrMemory{open, marker, flag == 1});
}

// ---------------------------------------------------------------------------
// Index-appearance-record machine

IarMemoryMachine::IarMemoryMachine(const StreettCondition& cond, std::uint32_t num_vertices) {
  if (cond.pairs.empty()) throw wrong_condition_type_error("streett expansion needs pairs");
  std::vector<const VertexSet*> e_sets, f_sets;
  for (const auto& p : cond.pairs) {
    e_sets.push_back(&p.e_set);
    f_sets.push_back(&p.f_set);
  }
  const auto& last = cond.pairs.back();
  const bool last_is_vv = last.e_set.size() == num_vertices && last.f_set.size() == num_vertices;
  VertexSet all(num_vertices);
  std::iota(all.begin(), all.end(), 0);
  if (!last_is_vv) {
    e_sets.push_back(&all);
    f_sets.push_back(&all);
  }
  index_count_ = static_cast<std::uint32_t>(e_sets.size());
  e_masks_ = membership_masks(e_sets, num_vertices);
  f_masks_ = membership_masks(f_sets, num_vertices);

  IarRecord s0;
  s0.perm.resize(index_count_);
  std::iota(s0.perm.begin(), s0.perm.end(), std::uint8_t{1});
  s0.e = s0.f = 1;
  intern(s0);
}

MemoryId IarMemoryMachine::intern(const IarRecord& rec) {
  std::string key(rec.perm.begin(), rec.perm.end());
  key.push_back(static_cast<char>(rec.e));
  key.push_back(static_cast<char>(rec.f));
  auto [it, inserted] = index_.try_emplace(std::move(key), count());
  if (inserted) {
    contents_.push_back(rec);
    successor_cache_.emplace_back(e_masks_.size(), kNoVertex);
  }
  return it->second;
}

MemoryId IarMemoryMachine::update(MemoryId s, VertexId v) {
  MemoryId& slot = successor_cache_[s][v];
  if (slot == kNoVertex) slot = intern(iar_update(contents_[s], e_masks_[v], f_masks_[v]));
  return slot;
}

std::string IarMemoryMachine::label(MemoryId s) const {
  const IarRecord& rec = contents_[s];
  std::ostringstream out;
  for (std::size_t l = 0; l < rec.perm.size(); ++l) {
    if (l) out << ' ';
    out << int(rec.perm[l]);
  }
  out << "|e=" << int(rec.e) << ",f=" << int(rec.f);
  return out.str();
}

void IarMemoryMachine::materialize_all() {
  std::vector<std::uint8_t> perm(index_count_);
  std::iota(perm.begin(), perm.end(), std::uint8_t{1});
  do {
    for (std::uint8_t e = 1; e <= index_count_; ++e)
      for (std::uint8_t f = 1; f <= index_count_; ++f) intern(IarRecord{perm, e, f});
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// ---------------------------------------------------------------------------
// Expansion

namespace {

// Every memory content is paired with every vertex, so the update closure
// must run over all vertices, not only along arena paths; this is what
// keeps the memory-equivalence check over "all v" total.
void close_memory(MemoryMachine& machine, std::uint32_t num_vertices,
                  std::size_t max_product_vertices) {
  for (MemoryId s = 0; s < machine.count(); ++s) {
    for (VertexId v = 0; v < num_vertices; ++v) machine.update(s, v);
    if (static_cast<std::size_t>(machine.count()) * num_vertices > max_product_vertices)
      throw error("memory expansion exceeds the configured size limit");
  }
}

template <typename AcceptanceFn>
SimulatedGame expand(const Game& game, std::shared_ptr<MemoryMachine> machine,
                     const ExpansionOptions& opts, AcceptanceFn&& acceptance) {
  const std::uint32_t n = game.arena.size();
  close_memory(*machine, n, opts.max_product_vertices);
  const std::uint32_t memory_count = machine->count();

  SimulatedGame sim;
  sim.machine = machine;
  sim.original = game;
  sim.original_vertices = n;
  sim.memory_count = memory_count;
  sim.initial_memory = 0;

  Arena& product = sim.product.arena;
  product.vertices.resize(static_cast<std::size_t>(memory_count) * n);
  product.edges.resize(product.vertices.size());
  sim.memory_of.resize(product.vertices.size());

  for (MemoryId s = 0; s < memory_count; ++s) {
    for (VertexId v = 0; v < n; ++v) {
      const VertexId pv = s * n + v;
      product.vertices[pv].id = pv;
      product.vertices[pv].owner = game.arena.owner(v);
      product.vertices[pv].label =
          "(" + machine->label(s) + " ; " + game.arena.vertices[v].label + ")";
      sim.memory_of[pv] = {s, v};
      const MemoryId s2 = machine->update(s, v);
      auto& out = product.edges[pv];
      out.reserve(game.arena.edges[v].size());
      for (VertexId v2 : game.arena.edges[v]) out.push_back(s2 * n + v2);
    }
  }

  sim.product.condition = acceptance(memory_count, n);
  return sim;
}

}  // namespace

SimulatedGame rr_to_buchi(const Game& game, const ExpansionOptions& opts) {
  const auto* cond = std::get_if<RequestResponseCondition>(&game.condition);
  if (!cond) throw wrong_condition_type_error("rr_to_buchi needs a request-response game");
  auto machine = std::make_shared<RrMemoryMachine>(*cond, game.arena.size());
  if (opts.full_memory) {
    if ((std::uint64_t{1} << machine->pair_count()) * machine->pair_count() * 2 *
            game.arena.size() >
        opts.max_product_vertices)
      throw error("full memory set exceeds the configured size limit");
    machine->materialize_all();
  }
  return expand(game, machine, opts, [&](std::uint32_t mem_count, std::uint32_t n) {
    BuchiCondition buchi;
    for (MemoryId s = 0; s < mem_count; ++s)
      if (machine->is_final(s))
        for (VertexId v = 0; v < n; ++v) buchi.final_vertices.push_back(s * n + v);
    return WinningCondition{std::move(buchi)};
  });
}

SimulatedGame streett_to_parity(const Game& game, const ExpansionOptions& opts) {
  const auto* cond = std::get_if<StreettCondition>(&game.condition);
  if (!cond) throw wrong_condition_type_error("streett_to_parity needs a streett game");
  auto machine = std::make_shared<IarMemoryMachine>(*cond, game.arena.size());
  if (opts.full_memory) {
    double full = 1.0;
    for (std::uint32_t i = 2; i <= machine->index_count(); ++i) full *= i;
    full *= machine->index_count() * machine->index_count() * game.arena.size();
    if (full > static_cast<double>(opts.max_product_vertices))
      throw error("full memory set exceeds the configured size limit");
    machine->materialize_all();
  }
  return expand(game, machine, opts, [&](std::uint32_t mem_count, std::uint32_t n) {
    ParityCondition par;
    par.polarity = Polarity::MaxEven;
    par.colors.resize(static_cast<std::size_t>(mem_count) * n);
    for (MemoryId s = 0; s < mem_count; ++s)
      for (VertexId v = 0; v < n; ++v) par.colors[s * n + v] = machine->color(s);
    return WinningCondition{std::move(par)};
  });
}

namespace {

class IdentityMachine : public MemoryMachine {
 public:
  MemoryId update(MemoryId, VertexId) override { return 0; }
  std::uint32_t count() const override { return 1; }
  std::string label(MemoryId) const override { return "-"; }
};

}  // namespace

SimulatedGame trivial_simulation(const Game& game) {
  if (!std::holds_alternative<BuchiCondition>(game.condition) &&
      !std::holds_alternative<ParityCondition>(game.condition))
    throw wrong_condition_type_error("trivial_simulation needs a buchi or parity game");
  SimulatedGame sim;
  sim.machine = std::make_shared<IdentityMachine>();
  sim.original = game;
  sim.product = game;
  sim.original_vertices = game.arena.size();
  sim.memory_count = 1;
  sim.initial_memory = 0;
  sim.memory_of.resize(game.arena.size());
  for (VertexId v = 0; v < game.arena.size(); ++v) sim.memory_of[v] = {0, v};
  return sim;
}

}  // namespace memred
