#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "memred/arena.hpp"

namespace memred {

using MemoryId = std::uint32_t;

/// Request-response memory: open requests, round-robin marker, wrap flag.
struct RrMemory {
  std::uint64_t open = 0;       // bit j-1 set iff pair j has a pending request
  std::uint32_t marker = 1;     // 1..k, the pair waited on next
  bool flag = false;            // marker wrapped k -> 1 on the last step
  bool operator==(const RrMemory&) const = default;
};

/// One memory-update step on leaving a vertex whose pair memberships are
/// given as bitmasks (bit j-1 of request_mask iff v is in P_j, likewise
/// response_mask for R_j). Total; pair_count >= 1.
RrMemory rr_memory_update(const RrMemory& mem, std::uint32_t pair_count,
                          std::uint64_t request_mask, std::uint64_t response_mask);

/// Index appearance record over m pair indices: a permutation of 1..m and
/// the two hit pointers. The convention E_m = F_m = V is assumed in force.
struct IarRecord {
  std::vector<std::uint8_t> perm;  // values 1..m, each exactly once
  std::uint8_t e = 1;
  std::uint8_t f = 1;
  bool operator==(const IarRecord&) const = default;
};

/// Stable left-shift of all indices whose E-set contains the vertex being
/// left; e' reads positions in the old permutation, f' in the new one.
IarRecord iar_update(const IarRecord& rec, std::uint64_t e_mask, std::uint64_t f_mask);

/// Max-parity color of an IAR memory content: 2e if e >= f, else 2f-1.
int iar_color(const IarRecord& rec);

/// Interning table of memory contents with the closed-form update
/// evaluated per original vertex. Content ids are creation order, which
/// is the fixed total order used for quotient representatives.
class MemoryMachine {
 public:
  virtual ~MemoryMachine() = default;

  /// Successor content of s when the play leaves vertex v.
  virtual MemoryId update(MemoryId s, VertexId v) = 0;
  virtual std::uint32_t count() const = 0;
  virtual std::string label(MemoryId s) const = 0;
};

class RrMemoryMachine : public MemoryMachine {
 public:
  RrMemoryMachine(const RequestResponseCondition& cond, std::uint32_t num_vertices);

  MemoryId update(MemoryId s, VertexId v) override;
  std::uint32_t count() const override { return static_cast<std::uint32_t>(contents_.size()); }
  std::string label(MemoryId s) const override;

  const RrMemory& content(MemoryId s) const { return contents_[s]; }
  bool is_final(MemoryId s) const { return contents_[s].flag; }
  std::uint32_t pair_count() const { return pair_count_; }
  MemoryId intern(const RrMemory& mem);
  /// Interns every (open, marker, flag) triple in canonical order.
  void materialize_all();

 private:
  std::uint32_t pair_count_;
  std::vector<std::uint64_t> request_masks_, response_masks_;
  std::vector<RrMemory> contents_;
  std::vector<std::vector<MemoryId>> successor_cache_;
  std::unordered_map<std::uint64_t, MemoryId> index_;
};

class IarMemoryMachine : public MemoryMachine {
 public:
  /// Appends the (V,V) convention pair unless the last pair already is
  /// (V,V); index_count() is the number of indices after that.
  IarMemoryMachine(const StreettCondition& cond, std::uint32_t num_vertices);

  MemoryId update(MemoryId s, VertexId v) override;
  std::uint32_t count() const override { return static_cast<std::uint32_t>(contents_.size()); }
  std::string label(MemoryId s) const override;

  const IarRecord& content(MemoryId s) const { return contents_[s]; }
  int color(MemoryId s) const { return iar_color(contents_[s]); }
  std::uint32_t index_count() const { return index_count_; }
  int max_color() const { return 2 * static_cast<int>(index_count_); }
  MemoryId intern(const IarRecord& rec);
  void materialize_all();

 private:
  std::uint32_t index_count_;
  std::vector<std::uint64_t> e_masks_, f_masks_;
  std::vector<IarRecord> contents_;
  std::vector<std::vector<MemoryId>> successor_cache_;
  std::unordered_map<std::string, MemoryId> index_;
};

/// Memory machine backed by an explicit update table (used for quotient
/// memories, whose update is the class-level successor map).
class TableMemoryMachine : public MemoryMachine {
 public:
  TableMemoryMachine(std::uint32_t contents, std::uint32_t vertices,
                     std::vector<MemoryId> table, std::vector<std::string> labels = {})
      : contents_(contents), vertices_(vertices), table_(std::move(table)),
        labels_(std::move(labels)) {}

  MemoryId update(MemoryId s, VertexId v) override {
    return table_[static_cast<std::size_t>(s) * vertices_ + v];
  }
  std::uint32_t count() const override { return contents_; }
  std::string label(MemoryId s) const override {
    return labels_.empty() ? "[" + std::to_string(s) + "]" : labels_[s];
  }

 private:
  std::uint32_t contents_, vertices_;
  std::vector<MemoryId> table_;
  std::vector<std::string> labels_;
};

/// A game simulation: the expanded game over memory x vertices together
/// with the projection data. Expanded vertex (s,v) has id s*|V|+v; every
/// materialized memory content is paired with every vertex.
struct SimulatedGame {
  Game product;
  std::vector<std::pair<MemoryId, VertexId>> memory_of;  // product vertex -> (s,v)
  MemoryId initial_memory = 0;
  std::shared_ptr<MemoryMachine> machine;
  Game original;

  std::uint32_t original_vertices = 0;
  std::uint32_t memory_count = 0;

  VertexId product_vertex(MemoryId s, VertexId v) const { return s * original_vertices + v; }
};

struct ExpansionOptions {
  /// Materialize the complete mathematical memory set instead of the
  /// update closure of {s0}. Guarded by max_product_vertices.
  bool full_memory = false;
  std::size_t max_product_vertices = 6'000'000;
};

/// Remark-4 simulation of a request-response game by a Buchi game.
SimulatedGame rr_to_buchi(const Game& game, const ExpansionOptions& opts = {});

/// Remark-5 simulation of a Streett game by a max-parity game via IARs.
SimulatedGame streett_to_parity(const Game& game, const ExpansionOptions& opts = {});

/// Wraps a Buchi or parity game as its own (single-content) simulation,
/// so the shared pipeline machinery applies to already-simple games.
SimulatedGame trivial_simulation(const Game& game);

}  // namespace memred
