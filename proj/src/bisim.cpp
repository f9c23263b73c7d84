#include "memred/bisim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace memred {

namespace {

struct RefinableBlocks {
  std::vector<StateId> elems;          // states grouped by block
  std::vector<std::uint32_t> loc;      // state -> position in elems
  std::vector<std::uint32_t> block_of;
  struct Block {
    std::uint32_t begin, end;   // [begin, end) in elems
    std::uint32_t marked;       // states swapped to the front of the block
  };
  std::vector<Block> blocks;

  std::uint32_t size_of(std::uint32_t b) const { return blocks[b].end - blocks[b].begin; }

  void mark(StateId q) {
    const std::uint32_t b = block_of[q];
    Block& blk = blocks[b];
    const std::uint32_t pos = loc[q];
    if (pos < blk.begin + blk.marked) return;  // already marked
    const std::uint32_t dst = blk.begin + blk.marked;
    std::swap(elems[pos], elems[dst]);
    loc[elems[pos]] = pos;
    loc[elems[dst]] = dst;
    ++blk.marked;
  }

  // Splits off the marked prefix into a fresh block; returns its id or
  // -1 when nothing splits. The unmarked rest keeps the old id.
  std::uint32_t split(std::uint32_t b) {
    if (blocks[b].marked == 0 || blocks[b].marked == blocks[b].end - blocks[b].begin) {
      blocks[b].marked = 0;
      return static_cast<std::uint32_t>(-1);
    }
    const std::uint32_t fresh = static_cast<std::uint32_t>(blocks.size());
    blocks.push_back({blocks[b].begin, blocks[b].begin + blocks[b].marked, 0});
    blocks[b].begin += blocks[b].marked;
    blocks[b].marked = 0;
    for (std::uint32_t pos = blocks[fresh].begin; pos < blocks[fresh].end; ++pos)
      block_of[elems[pos]] = fresh;
    return fresh;
  }
};

}  // namespace

StatePartition direct_bisim(const GameAutomaton& aut) {
  const auto* buchi = std::get_if<BuchiAcceptance>(&aut.acceptance);
  if (!buchi) throw wrong_condition_type_error("direct_bisim is defined on buchi automata");
  const std::uint32_t n = aut.num_states;
  const std::uint32_t sigma = aut.alphabet;

  // Letter-indexed predecessor lists in CSR form.
  std::vector<std::uint32_t> offsets(static_cast<std::size_t>(sigma) * n + 1, 0);
  for (StateId q = 0; q < n; ++q)
    for (VertexId a = 0; a < sigma; ++a)
      ++offsets[static_cast<std::size_t>(a) * n + aut.next(q, a) + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  std::vector<StateId> preds(static_cast<std::size_t>(sigma) * n);
  {
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (StateId q = 0; q < n; ++q)
      for (VertexId a = 0; a < sigma; ++a)
        preds[cursor[static_cast<std::size_t>(a) * n + aut.next(q, a)]++] = q;
  }

  RefinableBlocks part;
  part.elems.resize(n);
  part.loc.resize(n);
  part.block_of.resize(n);
  std::iota(part.elems.begin(), part.elems.end(), 0);
  std::stable_partition(part.elems.begin(), part.elems.end(),
                        [&](StateId q) { return buchi->final_states[q]; });
  std::uint32_t boundary = 0;
  while (boundary < n && buchi->final_states[part.elems[boundary]]) ++boundary;
  if (boundary == 0 || boundary == n) {
    part.blocks.push_back({0, n, 0});
  } else {
    part.blocks.push_back({0, boundary, 0});
    part.blocks.push_back({boundary, n, 0});
  }
  for (std::uint32_t pos = 0; pos < n; ++pos) part.loc[part.elems[pos]] = pos;
  for (std::uint32_t b = 0; b < part.blocks.size(); ++b)
    for (std::uint32_t pos = part.blocks[b].begin; pos < part.blocks[b].end; ++pos)
      part.block_of[part.elems[pos]] = b;

  std::deque<std::pair<std::uint32_t, VertexId>> worklist;
  std::vector<bool> queued;
  auto ensure_tracked = [&](std::uint32_t b) {
    if (static_cast<std::size_t>(b + 1) * sigma > queued.size())
      queued.resize(static_cast<std::size_t>(b + 1) * sigma, false);
  };
  auto enqueue = [&](std::uint32_t b, VertexId a) {
    ensure_tracked(b);
    const std::size_t key = static_cast<std::size_t>(b) * sigma + a;
    if (queued[key]) return;
    queued[key] = true;
    worklist.emplace_back(b, a);
  };

  {
    const std::uint32_t smaller =
        part.blocks.size() == 1 ? 0 : (part.size_of(0) <= part.size_of(1) ? 0 : 1);
    for (VertexId a = 0; a < sigma; ++a) enqueue(smaller, a);
  }

  std::vector<std::uint32_t> touched;
  std::vector<StateId> splitter_elems;
  while (!worklist.empty()) {
    auto [splitter, a] = worklist.front();
    worklist.pop_front();
    queued[static_cast<std::size_t>(splitter) * sigma + a] = false;

    // Snapshot the splitter's members: marking may permute the block,
    // including the splitter itself.
    splitter_elems.assign(part.elems.begin() + part.blocks[splitter].begin,
                          part.elems.begin() + part.blocks[splitter].end);
    touched.clear();
    for (const StateId t : splitter_elems) {
      const std::size_t row = static_cast<std::size_t>(a) * n + t;
      for (std::uint32_t i = offsets[row]; i < offsets[row + 1]; ++i) {
        const StateId p = preds[i];
        const std::uint32_t b = part.block_of[p];
        if (part.blocks[b].marked == 0) touched.push_back(b);
        part.mark(p);
      }
    }

    for (std::uint32_t b : touched) {
      const std::uint32_t fresh = part.split(b);
      if (fresh == static_cast<std::uint32_t>(-1)) continue;
      ensure_tracked(b);
      const std::uint32_t smaller = part.size_of(fresh) <= part.size_of(b) ? fresh : b;
      for (VertexId c = 0; c < sigma; ++c) {
        if (queued[static_cast<std::size_t>(b) * sigma + c])
          enqueue(fresh, c);
        else
          enqueue(smaller, c);
      }
    }
  }

  StatePartition out;
  out.block_of = std::move(part.block_of);
  // Renumber blocks by minimal member for a deterministic result.
  std::vector<std::uint32_t> renumber(part.blocks.size(), static_cast<std::uint32_t>(-1));
  std::uint32_t next_id = 0;
  for (StateId q = 0; q < n; ++q) {
    std::uint32_t& slot = renumber[out.block_of[q]];
    if (slot == static_cast<std::uint32_t>(-1)) slot = next_id++;
    out.block_of[q] = slot;
  }
  out.num_blocks = next_id;
  out.blocks.resize(next_id);
  for (StateId q = 0; q < n; ++q) out.blocks[out.block_of[q]].push_back(q);
  return out;
}

StatePartition delayed_sim_partition(const GameAutomaton& aut) {
  return direct_bisim(closure(aut));
}

MemoryPartition memory_partition_from_states(const GameAutomaton& aut,
                                             const StatePartition& part) {
  const std::uint32_t n = aut.alphabet;
  const std::uint32_t mem = (aut.num_states - 2) / n;
  std::map<std::vector<std::uint32_t>, std::uint32_t> groups;
  std::vector<std::uint32_t> raw(mem);
  std::vector<std::uint32_t> signature(n);
  for (MemoryId s = 0; s < mem; ++s) {
    for (VertexId v = 0; v < n; ++v) signature[v] = part.block_of[2 + s * n + v];
    raw[s] = groups.try_emplace(signature, static_cast<std::uint32_t>(groups.size())).first->second;
  }
  return partition_from_class_ids(std::move(raw));
}

StateEquivalence state_equivalence_from_partition(const GameAutomaton& aut,
                                                  const StatePartition& part) {
  const std::uint32_t n = aut.alphabet;
  const std::uint32_t mem = (aut.num_states - 2) / n;
  StateEquivalence eq;
  eq.class_at.assign(n, std::vector<std::uint32_t>(mem));
  for (VertexId v = 0; v < n; ++v)
    for (MemoryId s = 0; s < mem; ++s) eq.class_at[v][s] = part.block_of[2 + s * n + v];
  return eq;
}

MemoryPartition memory_equivalence_buchi(const GameAutomaton& aut) {
  if (!aut.is_game_automaton())
    throw error("memory_equivalence_buchi needs a game automaton");
  return memory_partition_from_states(aut, delayed_sim_partition(aut));
}

}  // namespace memred
