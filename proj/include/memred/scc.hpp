#pragma once

#include <cstdint>
#include <vector>

namespace memred {

/// Tarjan SCC decomposition result. Component ids are in reverse
/// topological order of discovery (successors get smaller ids).
struct SccDecomposition {
  std::vector<std::uint32_t> component;  // node -> component id
  std::uint32_t count = 0;
  std::vector<bool> has_cycle;  // component contains an edge inside itself
};

/// Iterative Tarjan over an adjacency callback. `Succ` is invoked as
/// succ(node, visit) where visit takes each successor node id; nodes
/// with `alive[node] == false` are skipped entirely (alive may be empty
/// to mean all nodes).
template <typename Succ>
SccDecomposition tarjan_scc(std::uint32_t n, Succ&& succ, const std::vector<bool>& alive = {}) {
  constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);
  SccDecomposition out;
  out.component.assign(n, kUnvisited);

  std::vector<std::uint32_t> index(n, kUnvisited), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0;

  struct Frame {
    std::uint32_t node;
    std::uint32_t next_child;
    std::vector<std::uint32_t> children;
  };
  std::vector<Frame> call_stack;

  auto is_alive = [&](std::uint32_t v) { return alive.empty() || alive[v]; };

  for (std::uint32_t root = 0; root < n; ++root) {
    if (!is_alive(root) || index[root] != kUnvisited) continue;

    call_stack.push_back({root, 0, {}});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    succ(root, [&](std::uint32_t t) {
      if (is_alive(t)) call_stack.back().children.push_back(t);
    });

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      if (frame.next_child < frame.children.size()) {
        const std::uint32_t child = frame.children[frame.next_child++];
        if (index[child] == kUnvisited) {
          index[child] = lowlink[child] = next_index++;
          stack.push_back(child);
          on_stack[child] = true;
          call_stack.push_back({child, 0, {}});
          succ(child, [&](std::uint32_t t) {
            if (is_alive(t)) call_stack.back().children.push_back(t);
          });
        } else if (on_stack[child]) {
          if (index[child] < lowlink[frame.node]) lowlink[frame.node] = index[child];
        }
      } else {
        if (lowlink[frame.node] == index[frame.node]) {
          const std::uint32_t comp = out.count++;
          std::uint32_t member;
          do {
            member = stack.back();
            stack.pop_back();
            on_stack[member] = false;
            out.component[member] = comp;
          } while (member != frame.node);
        }
        const std::uint32_t done = frame.node;
        call_stack.pop_back();
        if (!call_stack.empty()) {
          Frame& parent = call_stack.back();
          if (lowlink[done] < lowlink[parent.node]) lowlink[parent.node] = lowlink[done];
        }
      }
    }
  }

  out.has_cycle.assign(out.count, false);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!is_alive(v) || out.component[v] == kUnvisited) continue;
    succ(v, [&](std::uint32_t t) {
      if (is_alive(t) && out.component[t] == out.component[v])
        out.has_cycle[out.component[v]] = true;
    });
  }
  return out;
}

}  // namespace memred
