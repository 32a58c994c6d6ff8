#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "wallcheck/graph.hpp"

namespace wallcheck {

/// Dynamic fixed-width bitset sized at construction. Fast enough for the
/// hosts handled here (a few hundred vertices).
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  std::size_t size() const { return n_; }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  std::size_t count() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Connected components of g, each a sorted vertex list; components ordered
/// by smallest member.
std::vector<std::vector<VertexId>> connected_components(const LabeledGraph& g);

bool is_connected(const LabeledGraph& g);

/// True when u and v lie in the same component of g with every vertex of
/// `removed` deleted.
bool connected_avoiding(const LabeledGraph& g, VertexId u, VertexId v,
                        const std::set<VertexId>& removed);

/// Blocks (biconnected components) as vertex sets, ordered by smallest
/// member then size. Bridges count as two-vertex blocks; isolated vertices
/// form no block.
std::vector<std::vector<VertexId>> blocks(const LabeledGraph& g);

bool is_biconnected(const LabeledGraph& g);

/// Maximum number of vertex-disjoint paths from `sources` to `sinks`, where
/// each vertex v may appear on at most cap(v) paths and paths are internally
/// disjoint from each other. Source/sink sets must be disjoint. Standard
/// node-splitting unit-capacity flow.
int max_vertex_disjoint_paths(const LabeledGraph& g,
                              const std::vector<VertexId>& sources,
                              const std::vector<VertexId>& sinks,
                              const std::function<int(VertexId)>& cap);

/// Runs fn(i) for i in [0,n) across `workers` threads. Results must be
/// written to per-index slots by the caller; the partition of indices is
/// static, so output never depends on scheduling.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& fn);

}  // namespace wallcheck
