#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "maxplanar/graph.hpp"
#include "maxplanar/rotation_map.hpp"

namespace maxplanar {

using Rational = boost::rational<long long>;

// Length of a shortest cycle, or nullopt for forests. Per-vertex BFS.
std::optional<int> girth(const SimpleGraph& g);

// Same, but only cycles of length <= cap are searched for. Exact below the
// cap; nullopt when no cycle that short exists.
std::optional<int> girth_up_to(const SimpleGraph& g, int cap);

// Euler bound for planar graphs of girth g: e(G) <= g (n-2) / (g-2).
Rational max_edges(int g, int n);

// Divisibility needed for the bound to be attained: n == 2 (mod g-2) for odd
// g, n == 2 (mod (g-2)/2) for even g.
bool divisibility_ok(int g, int n);

// Independent planarity certificate (Boyer-Myrvold). Not on the construction
// hot path; builders keep planarity by construction and this backs the debug
// verification.
bool is_planar(const SimpleGraph& g);

// Two-colorability check, BFS.
bool is_bipartite(const SimpleGraph& g);

struct VerificationReport {
  bool is_spanning = false;
  std::optional<int> girth_found;
  bool all_faces_size_g = false;
  long long edge_count = 0;
  bool edge_count_matches_bound = false;
  bool edges_in_host = false;
  bool passed = false;
  std::vector<std::string> failures;
};

// Checks that `map` is a spanning maximal planar subgraph of `host` with
// girth g: map edges contained in host, spanning and connected, girth
// exactly g, every face of length g, and edge count exactly g(n-2)/(g-2).
VerificationReport verify_spanning_maximal(const RotationMap& map,
                                           const SimpleGraph& host, int g);

}  // namespace maxplanar
