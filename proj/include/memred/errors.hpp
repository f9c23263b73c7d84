#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace memred {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arena or condition invariant violated (file input, hand-built games).
struct validation_error : error {
  using error::error;
};

/// A vertex with no outgoing edge.
struct dead_vertex_error : validation_error {
  explicit dead_vertex_error(std::uint32_t v)
      : validation_error("dead vertex " + std::to_string(v) +
                         ": every vertex needs at least one successor"),
        vertex(v) {}
  std::uint32_t vertex;
};

/// An id outside the arena's vertex range.
struct bad_reference_error : validation_error {
  using validation_error::validation_error;
};

struct empty_cycle_error : error {
  empty_cycle_error() : error("lasso cycle must be non-empty") {}
};

struct wrong_condition_type_error : error {
  using error::error;
};

struct alphabet_mismatch_error : error {
  using error::error;
};

struct incompatible_partition_error : error {
  using error::error;
};

struct polarity_error : error {
  using error::error;
};

struct v_component_mismatch_error : error {
  using error::error;
};

struct not_winning_error : error {
  using error::error;
};

struct partial_strategy_error : error {
  using error::error;
};

}  // namespace memred
