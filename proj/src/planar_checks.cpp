#include "maxplanar/planar_checks.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace maxplanar {

namespace {

// Shortest cycle through root, BFS with parent-edge exclusion. Stops
// expanding past depth_cap.
int shortest_cycle_through(const SimpleGraph& g, Vertex root, int depth_cap) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::queue<Vertex> q;
  dist[root] = 0;
  q.push(root);
  int best = std::numeric_limits<int>::max();
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    if (dist[u] >= depth_cap) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        q.push(w);
      } else if (w != parent[u] && dist[w] >= dist[u]) {
        // Non-tree edge closing a cycle through the BFS tree. The cycle
        // through root has length at most dist[u] + dist[w] + 1; it is the
        // true shortest through root when the walk stays on shortest paths,
        // and taking a minimum over all roots makes the global girth exact.
        best = std::min(best, dist[u] + dist[w] + 1);
      }
    }
  }
  return best;
}

}  // namespace

std::optional<int> girth_up_to(const SimpleGraph& g, int cap) {
  int best = std::numeric_limits<int>::max();
  const int depth_cap = cap / 2 + 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) continue;
    best = std::min(best, shortest_cycle_through(g, v, depth_cap));
    if (best == 3) break;
  }
  if (best > cap) return std::nullopt;
  return best;
}

std::optional<int> girth(const SimpleGraph& g) {
  return girth_up_to(g, g.vertex_count());
}

Rational max_edges(int g, int n) {
  if (g < 3) throw std::invalid_argument("girth must be >= 3");
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  return Rational(static_cast<long long>(g) * (n - 2), g - 2);
}

bool divisibility_ok(int g, int n) {
  if (g < 3) throw std::invalid_argument("girth must be >= 3");
  if (g % 2 == 1) {
    return ((n - 2) % (g - 2)) == 0;
  }
  const int m = (g - 2) / 2;
  if (m == 1) return true;
  return ((n - 2) % m) == 0;
}

bool is_planar(const SimpleGraph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.vertex_count());
  for (const auto& [u, v] : g.sorted_edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_bipartite(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0 || g.degree(s) == 0) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

VerificationReport verify_spanning_maximal(const RotationMap& map,
                                           const SimpleGraph& host, int g) {
  VerificationReport rep;
  const int n = map.vertex_count();
  std::ostringstream msg;
  if (host.vertex_count() != n) {
    rep.failures.push_back("map and host vertex counts differ");
    return rep;
  }

  SimpleGraph mg = map.to_graph();
  rep.edge_count = static_cast<long long>(mg.edge_count());

  rep.edges_in_host = true;
  for (const auto& [u, v] : mg.sorted_edges()) {
    if (!host.has_edge(u, v)) {
      rep.edges_in_host = false;
      msg.str("");
      msg << "map edge (" << u << "," << v << ") not in host";
      rep.failures.push_back(msg.str());
      break;
    }
  }

  bool all_used = true;
  for (Vertex v = 0; v < n; ++v) {
    if (map.degree(v) == 0) {
      all_used = false;
      msg.str("");
      msg << "vertex " << v << " is isolated";
      rep.failures.push_back(msg.str());
      break;
    }
  }
  rep.is_spanning = all_used && mg.is_connected();
  if (all_used && !rep.is_spanning) rep.failures.push_back("map is not connected");

  rep.girth_found = girth_up_to(mg, g + 2);
  if (rep.girth_found != g) {
    msg.str("");
    msg << "girth is " << (rep.girth_found ? std::to_string(*rep.girth_found) : "none")
        << ", expected " << g;
    rep.failures.push_back(msg.str());
  }

  rep.all_faces_size_g = true;
  for (FaceId f : map.live_faces()) {
    if (map.face_length(f) != g) {
      rep.all_faces_size_g = false;
      msg.str("");
      msg << "face " << f << " has length " << map.face_length(f);
      rep.failures.push_back(msg.str());
      break;
    }
  }

  const Rational bound = max_edges(g, n);
  rep.edge_count_matches_bound = Rational(rep.edge_count) == bound;
  if (!rep.edge_count_matches_bound) {
    msg.str("");
    msg << "edge count " << rep.edge_count << " != " << bound.numerator() << "/"
        << bound.denominator();
    rep.failures.push_back(msg.str());
  }

  std::string structural = map.check_invariants();
  if (!structural.empty()) rep.failures.push_back("map invariants: " + structural);

  // Independent planarity certificate at debug scale.
  if (n <= 500 && !is_planar(mg)) rep.failures.push_back("planarity test failed");

  rep.passed = rep.failures.empty() && rep.is_spanning && rep.girth_found == g &&
               rep.all_faces_size_g && rep.edge_count_matches_bound && rep.edges_in_host;
  return rep;
}

}  // namespace maxplanar
