#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace maxplanar {

using Vertex = std::int32_t;

// Undirected simple graph on vertices 0..n-1. Adjacency lists and the edge
// set are kept consistent; no self-loops, no parallel edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_keys_.size(); }

  bool has_edge(Vertex u, Vertex v) const;
  // Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  // Edges as (u, v) with u < v, sorted lexicographically (canonical order).
  std::vector<std::pair<Vertex, Vertex>> sorted_edges() const;

  bool is_connected() const;

  // Canonical JSON: {"n": int, "edges": [[u,v],...]} with u < v, sorted.
  std::string to_json() const;
  static SimpleGraph from_json(const std::string& text);

 private:
  std::uint64_t key(Vertex u, Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

struct SampleParams {
  int n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// One G(n,p) draw. Each of the C(n,2) pairs is present independently with
// probability p; deterministic given the seed.
SimpleGraph sample_gnp(const SampleParams& params);

// p' such that the union of m independent G(n,p') layers is G(n,p):
// (1 - p')^m = 1 - p.
double layer_probability(double p, int m);

// m independent layers over a shared vertex set plus their union.
struct EdgeLayers {
  int layer_count = 0;
  std::vector<SimpleGraph> layers;
  SimpleGraph union_graph;
};

EdgeLayers split_layers(int n, double p, int m, std::uint64_t seed);

// Nested-coupling sampler: every potential edge of every layer owns one
// uniform variate derived from (seed, layer, edge index), so realizing the
// layers at p1 <= p2 with the same seed yields nested edge sets. Used by the
// monotonicity checks in the threshold lab.
class CoupledLayerSampler {
 public:
  CoupledLayerSampler(int n, int layer_count, std::uint64_t seed);
  EdgeLayers realize(double p) const;

 private:
  int n_;
  int layer_count_;
  std::uint64_t seed_;
};

}  // namespace maxplanar
