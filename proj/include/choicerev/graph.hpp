#ifndef CHOICEREV_GRAPH_HPP
#define CHOICEREV_GRAPH_HPP

// Small directed-graph routines on adjacency lists indexed 0..n-1.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace choicerev::graph {

using Adjacency = std::vector<std::vector<std::size_t>>;

// Tarjan's algorithm, iterative. Returns the component id of each node;
// ids are assigned in reverse topological order of the condensation.
inline std::vector<std::size_t> strongly_connected_components(const Adjacency& g) {
  const std::size_t n = g.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, next_comp = 0;

  struct Frame {
    std::size_t node;
    std::size_t edge;
  };
  std::vector<Frame> frames;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < g[f.node].size()) {
        std::size_t w = g[f.node][f.edge++];
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      std::size_t v = f.node;
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
      frames.pop_back();
      if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
    }
  }
  return comp;
}

// Shortest path from `from` to `to` (BFS), inclusive of both endpoints.
inline std::optional<std::vector<std::size_t>> shortest_path(const Adjacency& g, std::size_t from,
                                                            std::size_t to) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(g.size(), none);
  std::queue<std::size_t> q;
  q.push(from);
  parent[from] = from;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    if (v == to) break;
    for (std::size_t w : g[v]) {
      if (parent[w] == none) {
        parent[w] = v;
        q.push(w);
      }
    }
  }
  if (parent[to] == none) return std::nullopt;
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  return std::vector<std::size_t>(path.rbegin(), path.rend());
}

// Dense boolean matrix with row-wise bitsets.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1; }
  void set(std::size_t i, std::size_t j, bool value = true) {
    auto& w = bits_[i * words_ + j / 64];
    if (value) {
      w |= std::uint64_t{1} << (j % 64);
    } else {
      w &= ~(std::uint64_t{1} << (j % 64));
    }
  }
  // Smallest k with (j, k) set and (i, k) clear.
  std::optional<std::size_t> first_missing(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t w = bits_[j * words_ + k] & ~bits_[i * words_ + k];
      if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
    }
    return std::nullopt;
  }
  // row i |= row j
  void or_row(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < words_; ++k) bits_[i * words_ + k] |= bits_[j * words_ + k];
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Reflexive-transitive closure (Warshall over bitset rows).
inline BitMatrix reachability(const Adjacency& g) {
  const std::size_t n = g.size();
  BitMatrix r(n);
  for (std::size_t v = 0; v < n; ++v) {
    r.set(v, v);
    for (std::size_t w : g[v]) r.set(v, w);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (r.get(i, k)) r.or_row(i, k);
    }
  }
  return r;
}

// Linear extension of the order given by a DAG: Kahn's algorithm, always
// emitting the available node that is smallest under `less`.
template <class Less>
std::vector<std::size_t> stable_topological_order(const Adjacency& g, Less less) {
  const std::size_t n = g.size();
  std::vector<std::size_t> in_degree(n, 0);
  for (const auto& out : g) {
    for (std::size_t w : out) ++in_degree[w];
  }
  auto greater = [&](std::size_t a, std::size_t b) { return less(b, a); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(greater)> ready(greater);
  for (std::size_t v = 0; v < n; ++v) {
    if (in_degree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : g[v]) {
      if (--in_degree[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) throw std::logic_error("graph has a cycle; no linear extension");
  return order;
}

}  // namespace choicerev::graph

#endif  // CHOICEREV_GRAPH_HPP
