#include "maxplanar/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "maxplanar/rng.hpp"

namespace maxplanar {

SimpleGraph::SimpleGraph(int vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("vertex_count must be >= 1");
  adjacency_.resize(vertex_count);
}

std::uint64_t SimpleGraph::key(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  if (u == v) return false;
  return edge_keys_.count(key(u, v)) != 0;
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("vertex id out of range");
  if (!edge_keys_.insert(key(u, v)).second) return false;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  return true;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::sorted_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_keys_.size());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SimpleGraph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n;
}

std::string SimpleGraph::to_json() const {
  nlohmann::json j;
  j["n"] = vertex_count();
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : sorted_edges()) {
    edges.push_back({u, v});
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

SimpleGraph SimpleGraph::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SimpleGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  }
  return g;
}

namespace {

// Lexicographic index of the pair (u, v), u < v, over n vertices.
// Used by the skip sampler: pairs are visited in index order with
// geometric jumps, so the cost is O(expected edges).
std::int64_t pair_count(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

std::pair<Vertex, Vertex> pair_from_index(std::int64_t idx, int n) {
  // Row u starts at offset u*n - u*(u+1)/2 - u... solve by scanning rows via
  // the closed form, then fix up (cheap and exact).
  std::int64_t remaining = idx;
  // Initial guess from the quadratic inverse, then adjust.
  double nn = static_cast<double>(n);
  double guess = nn - 0.5 - std::sqrt((nn - 0.5) * (nn - 0.5) - 2.0 * static_cast<double>(idx));
  Vertex u = static_cast<Vertex>(std::max(0.0, guess));
  auto row_start = [n](Vertex r) {
    return static_cast<std::int64_t>(r) * n - static_cast<std::int64_t>(r) * (r + 1) / 2;
  };
  while (u > 0 && row_start(u) > idx) --u;
  while (row_start(u + 1) <= idx) ++u;
  remaining = idx - row_start(u);
  Vertex v = static_cast<Vertex>(u + 1 + remaining);
  return {u, v};
}

void fill_gnp(SimpleGraph& g, int n, double p, Rng& rng) {
  if (p <= 0.0) return;
  const std::int64_t total = pair_count(n);
  if (p >= 1.0) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return;
  }
  const double log_q = std::log1p(-p);
  std::int64_t idx = -1;
  for (;;) {
    double u = rng.next_double();
    // Geometric skip: number of misses before the next present edge.
    double skip = std::floor(std::log1p(-u) / log_q);
    if (skip > static_cast<double>(total)) break;
    idx += 1 + static_cast<std::int64_t>(skip);
    if (idx >= total) break;
    auto [a, b] = pair_from_index(idx, n);
    g.add_edge(a, b);
  }
}

}  // namespace

SimpleGraph sample_gnp(const SampleParams& params) {
  if (params.n < 1) throw std::invalid_argument("n must be >= 1");
  if (params.p < 0.0 || params.p > 1.0)
    throw std::invalid_argument("p must be in [0, 1]");
  SimpleGraph g(params.n);
  Rng rng(derive_seed(params.seed, {0x676e70ULL}));
  fill_gnp(g, params.n, params.p, rng);
  return g;
}

double layer_probability(double p, int m) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (m == 1) return p;
  // 1 - (1-p)^(1/m), computed via expm1/log1p to avoid cancellation at
  // small p.
  return -std::expm1(std::log1p(-p) / m);
}

EdgeLayers split_layers(int n, double p, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
  // The m layers are generated directly as independent G(n,p') draws and the
  // union is defined as their union; the joint law matches splitting a
  // pre-drawn edge set.
  const double pp = layer_probability(p, m);
  EdgeLayers out;
  out.layer_count = m;
  out.layers.reserve(m);
  out.union_graph = SimpleGraph(n);
  for (int j = 0; j < m; ++j) {
    SimpleGraph layer(n);
    Rng rng(derive_seed(seed, {0x6c617965ULL, static_cast<std::uint64_t>(j)}));
    fill_gnp(layer, n, pp, rng);
    for (const auto& [u, v] : layer.sorted_edges()) out.union_graph.add_edge(u, v);
    out.layers.push_back(std::move(layer));
  }
  return out;
}

CoupledLayerSampler::CoupledLayerSampler(int n, int layer_count, std::uint64_t seed)
    : n_(n), layer_count_(layer_count), seed_(seed) {
  if (n < 1 || layer_count < 1) throw std::invalid_argument("bad sampler dims");
}

EdgeLayers CoupledLayerSampler::realize(double p) const {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
  const double pp = layer_probability(p, layer_count_);
  EdgeLayers out;
  out.layer_count = layer_count_;
  out.union_graph = SimpleGraph(n_);
  for (int j = 0; j < layer_count_; ++j) out.layers.emplace_back(n_);
  std::int64_t idx = 0;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v, ++idx) {
      for (int j = 0; j < layer_count_; ++j) {
        std::uint64_t h = mix64(seed_ ^ mix64((static_cast<std::uint64_t>(j) << 48) ^
                                              static_cast<std::uint64_t>(idx) ^
                                              0xc01dc0ffeeULL));
        double uni = (h >> 11) * 0x1.0p-53;
        if (uni < pp) {
          out.layers[j].add_edge(u, v);
          out.union_graph.add_edge(u, v);
        }
      }
    }
  }
  return out;
}

}  // namespace maxplanar
