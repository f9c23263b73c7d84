#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "memred/errors.hpp"

namespace memred {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

enum class Player : std::uint8_t { Zero = 0, One = 1 };

inline Player opponent(Player p) {
  return p == Player::Zero ? Player::One : Player::Zero;
}

struct Vertex {
  VertexId id = 0;
  Player owner = Player::Zero;
  std::string label;
};

/// Finite game graph with a total edge relation. edges[v] is the ordered
/// successor list of v; ids are contiguous 0..|V|-1.
struct Arena {
  std::vector<Vertex> vertices;
  std::vector<std::vector<VertexId>> edges;

  std::uint32_t size() const { return static_cast<std::uint32_t>(vertices.size()); }
  std::size_t num_edges() const {
    std::size_t m = 0;
    for (const auto& out : edges) m += out.size();
    return m;
  }
  Player owner(VertexId v) const { return vertices[v].owner; }
  const std::vector<VertexId>& successors(VertexId v) const { return edges[v]; }
  bool has_edge(VertexId u, VertexId v) const;
};

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

bool set_contains(const VertexSet& set, VertexId v);
VertexSet make_vertex_set(std::vector<VertexId> ids);

struct RrPair {
  VertexSet request;   // P_j
  VertexSet response;  // R_j
};

struct StreettPair {
  VertexSet e_set;  // E_j: must recur if F_j recurs
  VertexSet f_set;  // F_j
};

enum class Polarity : std::uint8_t { MaxEven, MinEven };

struct RequestResponseCondition {
  std::vector<RrPair> pairs;
};

struct StreettCondition {
  std::vector<StreettPair> pairs;
};

struct BuchiCondition {
  VertexSet final_vertices;
};

struct ParityCondition {
  std::vector<int> colors;  // indexed by vertex id
  Polarity polarity = Polarity::MaxEven;
};

using WinningCondition = std::variant<RequestResponseCondition, StreettCondition,
                                      BuchiCondition, ParityCondition>;

const char* condition_name(const WinningCondition& c);

struct Game {
  Arena arena;
  WinningCondition condition;
};

/// Checks all Arena and WinningCondition invariants. Throws
/// dead_vertex_error / bad_reference_error / validation_error.
void validate(const Game& game);

/// Ultimately periodic play prefix.cycle^omega; the canonical finite
/// witness for all omega-checks.
struct Lasso {
  std::vector<VertexId> prefix;
  std::vector<VertexId> cycle;
};

/// Truth of the winning condition on prefix.cycle^omega. The caller
/// guarantees the lasso is a path in some arena; throws empty_cycle_error.
bool play_satisfies(const WinningCondition& condition, const Lasso& lasso);

/// Per-vertex membership bitmasks for a list of vertex sets (bit j of
/// mask[v] set iff v is in sets[j]). Requires sets.size() <= 62.
std::vector<std::uint64_t> membership_masks(const std::vector<const VertexSet*>& sets,
                                            std::uint32_t num_vertices);

}  // namespace memred
