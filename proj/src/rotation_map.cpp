#include "maxplanar/rotation_map.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace maxplanar {

RotationMap::RotationMap(int vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("vertex_count must be >= 1");
  first_dart_.assign(vertex_count, kNoDart);
  degree_.assign(vertex_count, 0);
  dsu_parent_.resize(vertex_count);
  std::iota(dsu_parent_.begin(), dsu_parent_.end(), 0);
}

int RotationMap::dsu_find(int x) const {
  while (dsu_parent_[x] != x) {
    dsu_parent_[x] = dsu_parent_[dsu_parent_[x]];
    x = dsu_parent_[x];
  }
  return x;
}

void RotationMap::dsu_union(int a, int b) {
  a = dsu_find(a);
  b = dsu_find(b);
  if (a != b) dsu_parent_[b] = a;
}

bool RotationMap::same_component(Vertex u, Vertex v) const {
  return dsu_find(u) == dsu_find(v);
}

Dart RotationMap::new_dart_pair(Vertex u, Vertex v) {
  Dart d = static_cast<Dart>(darts_.size());
  darts_.push_back({u, kNoDart, kNoDart, kNoFace});
  darts_.push_back({v, kNoDart, kNoDart, kNoFace});
  return d;
}

void RotationMap::splice_before(Dart e, Dart d) {
  Dart p = darts_[d].prev;
  darts_[p].next = e;
  darts_[e].prev = p;
  darts_[e].next = d;
  darts_[d].prev = e;
}

FaceId RotationMap::assign_face(Dart d) {
  FaceId f = static_cast<FaceId>(face_rep_.size());
  face_rep_.push_back(d);
  face_len_.push_back(0);
  int len = 0;
  Dart cur = d;
  do {
    darts_[cur].face = f;
    ++len;
    cur = face_next(cur);
  } while (cur != d);
  face_len_[f] = len;
  ++live_face_count_;
  return f;
}

void RotationMap::retire_face(FaceId f) {
  if (f != kNoFace && face_rep_[f] != kNoDart) {
    face_rep_[f] = kNoDart;
    face_len_[f] = 0;
    --live_face_count_;
  }
}

std::vector<FaceId> RotationMap::live_faces() const {
  std::vector<FaceId> out;
  out.reserve(live_face_count_);
  for (FaceId f = 0; f < static_cast<FaceId>(face_rep_.size()); ++f) {
    if (face_rep_[f] != kNoDart) out.push_back(f);
  }
  return out;
}

Dart RotationMap::canonical_dart(FaceId f) const {
  Dart rep = face_rep_[f];
  if (rep == kNoDart) throw std::invalid_argument("face is not alive");
  Dart best = rep;
  Dart cur = rep;
  do {
    best = std::min(best, cur);
    cur = face_next(cur);
  } while (cur != rep);
  return best;
}

std::vector<Dart> RotationMap::face_darts(FaceId f) const {
  Dart start = canonical_dart(f);
  std::vector<Dart> out;
  out.reserve(face_len_[f]);
  Dart cur = start;
  do {
    out.push_back(cur);
    cur = face_next(cur);
  } while (cur != start);
  return out;
}

std::vector<Vertex> RotationMap::face_vertices(FaceId f) const {
  std::vector<Vertex> out;
  for (Dart d : face_darts(f)) out.push_back(origin(d));
  return out;
}

Dart RotationMap::find_corner(FaceId f, Vertex v) const {
  Dart rep = face_rep_[f];
  if (rep == kNoDart) throw std::invalid_argument("face is not alive");
  Dart cur = rep;
  do {
    if (origin(cur) == v) return cur;
    cur = face_next(cur);
  } while (cur != rep);
  return kNoDart;
}

RotationMap::CycleFaces RotationMap::add_cycle(std::span<const Vertex> cycle) {
  const int m = static_cast<int>(cycle.size());
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  for (Vertex v : cycle) {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("cycle vertex out of range");
    if (degree_[v] != 0) throw std::invalid_argument("cycle vertex is not isolated");
  }
  std::vector<Dart> fwd(m);
  for (int i = 0; i < m; ++i) {
    fwd[i] = new_dart_pair(cycle[i], cycle[(i + 1) % m]);
  }
  for (int i = 0; i < m; ++i) {
    Dart f = fwd[i];
    Dart b_prev = twin(fwd[(i + m - 1) % m]);  // dart v_i -> v_{i-1}
    darts_[f].next = b_prev;
    darts_[f].prev = b_prev;
    darts_[b_prev].next = f;
    darts_[b_prev].prev = f;
    first_dart_[cycle[i]] = f;
    degree_[cycle[i]] = 2;
    dsu_union(cycle[0], cycle[i]);
  }
  CycleFaces out;
  out.inner = assign_face(fwd[0]);
  out.outer = assign_face(twin(fwd[0]));
  return out;
}

RotationMap::PathResult RotationMap::insert_path(Dart corner_a, Dart corner_b,
                                                 std::span<const Vertex> interior) {
  if (corner_a < 0 || corner_b < 0 || corner_a >= static_cast<Dart>(darts_.size()) ||
      corner_b >= static_cast<Dart>(darts_.size()))
    throw std::out_of_range("corner dart out of range");
  if (corner_a == corner_b) throw std::invalid_argument("corners must differ");
  const Vertex u = origin(corner_a);
  const Vertex v = origin(corner_b);
  if (u == v) throw std::invalid_argument("path endpoints must differ");
  for (Vertex w : interior) {
    if (w < 0 || w >= vertex_count()) throw std::out_of_range("interior vertex out of range");
    if (degree_[w] != 0) throw std::invalid_argument("interior vertex is not isolated");
  }
  const FaceId fa_old = face_of(corner_a);
  const FaceId fb_old = face_of(corner_b);
  const bool same_face = fa_old == fb_old;
  if (!same_face && same_component(u, v))
    throw std::invalid_argument(
        "corners lie on different faces of one component; inserting would break planarity");

  // Path vertices u = w_0, ..., w_k = v.
  std::vector<Vertex> walk;
  walk.reserve(interior.size() + 2);
  walk.push_back(u);
  for (Vertex w : interior) walk.push_back(w);
  walk.push_back(v);

  std::vector<Dart> fwd(walk.size() - 1);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    fwd[i] = new_dart_pair(walk[i], walk[i + 1]);
  }
  // Interior rotations: two darts each, [back, forward].
  for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
    Dart back = twin(fwd[i - 1]);
    Dart fw = fwd[i];
    darts_[back].next = fw;
    darts_[back].prev = fw;
    darts_[fw].next = back;
    darts_[fw].prev = back;
    first_dart_[walk[i]] = fw;
    degree_[walk[i]] = 2;
    dsu_union(u, walk[i]);
  }
  splice_before(fwd.front(), corner_a);
  splice_before(twin(fwd.back()), corner_b);
  ++degree_[u];
  ++degree_[v];
  dsu_union(u, v);

  PathResult out;
  out.path = fwd;
  retire_face(fa_old);
  retire_face(fb_old);
  FaceId fa = assign_face(corner_a);
  if (face_of(corner_b) == fa) {
    out.merged = true;
    out.face_a = out.face_b = fa;
  } else {
    out.merged = false;
    out.face_a = fa;
    out.face_b = assign_face(corner_b);
  }
  if (out.merged == same_face) {
    throw std::logic_error("face bookkeeping diverged from component tracking");
  }
  return out;
}

SimpleGraph RotationMap::to_graph() const {
  SimpleGraph g(vertex_count());
  for (Dart d = 0; d < static_cast<Dart>(darts_.size()); d += 2) {
    g.add_edge(darts_[d].origin, darts_[d + 1].origin);
  }
  return g;
}

std::string RotationMap::check_invariants() const {
  std::ostringstream err;
  const int dart_total = static_cast<int>(darts_.size());
  if (dart_total % 2 != 0) return "odd number of darts";
  // Rotation cycles cover each vertex's darts exactly once.
  std::vector<char> seen(dart_total, 0);
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree_[v] == 0) {
      if (first_dart_[v] != kNoDart) err << "isolated vertex " << v << " has a dart; ";
      continue;
    }
    Dart start = first_dart_[v];
    Dart cur = start;
    int steps = 0;
    do {
      if (origin(cur) != v) {
        err << "rotation of " << v << " contains foreign dart; ";
        break;
      }
      if (seen[cur]) {
        err << "dart " << cur << " visited twice in rotations; ";
        break;
      }
      seen[cur] = 1;
      if (rot_next(rot_prev(cur)) != cur || rot_prev(rot_next(cur)) != cur) {
        err << "rotation links broken at dart " << cur << "; ";
        break;
      }
      cur = rot_next(cur);
      ++steps;
    } while (cur != start && steps <= degree_[v]);
    if (steps != degree_[v]) err << "rotation of " << v << " has wrong length; ";
  }
  for (Dart d = 0; d < dart_total; ++d) {
    if (!seen[d]) err << "dart " << d << " not reachable from any rotation; ";
  }
  // Face orbits partition the darts and lengths agree.
  std::vector<char> fseen(dart_total, 0);
  long long len_sum = 0;
  int live = 0;
  for (FaceId f = 0; f < static_cast<FaceId>(face_rep_.size()); ++f) {
    Dart rep = face_rep_[f];
    if (rep == kNoDart) continue;
    ++live;
    Dart cur = rep;
    int len = 0;
    do {
      if (face_of(cur) != f) {
        err << "dart on face " << f << " carries wrong face id; ";
        break;
      }
      if (fseen[cur]) {
        err << "dart " << cur << " on two faces; ";
        break;
      }
      fseen[cur] = 1;
      ++len;
      cur = face_next(cur);
    } while (cur != rep && len <= dart_total);
    if (len != face_len_[f]) err << "face " << f << " length mismatch; ";
    len_sum += len;
  }
  if (live != live_face_count_) err << "live face count mismatch; ";
  for (Dart d = 0; d < dart_total; ++d) {
    if (!fseen[d]) err << "dart " << d << " not on any live face; ";
  }
  if (len_sum != dart_total) err << "sum of face lengths != 2E; ";
  // Euler formula per edge-bearing component.
  std::map<int, std::array<long long, 3>> comps;  // root -> {V, E, F}
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (degree_[v] > 0) comps[dsu_find(v)][0] += 1;
  }
  for (Dart d = 0; d < dart_total; d += 2) {
    comps[dsu_find(origin(d))][1] += 1;
  }
  for (FaceId f = 0; f < static_cast<FaceId>(face_rep_.size()); ++f) {
    if (face_rep_[f] != kNoDart) comps[dsu_find(origin(face_rep_[f]))][2] += 1;
  }
  for (const auto& [root, vef] : comps) {
    if (vef[1] == 0) continue;
    if (vef[0] - vef[1] + vef[2] != 2) {
      err << "component at " << root << " violates V-E+F=2 (" << vef[0] << "-" << vef[1]
          << "+" << vef[2] << "); ";
    }
  }
  return err.str();
}

std::string RotationMap::to_json() const {
  nlohmann::json rotations = nlohmann::json::array();
  for (Vertex v = 0; v < vertex_count(); ++v) {
    nlohmann::json ring = nlohmann::json::array();
    if (degree_[v] > 0) {
      Dart start = first_dart_[v];
      Dart cur = start;
      do {
        ring.push_back(head(cur));
        cur = rot_next(cur);
      } while (cur != start);
    }
    rotations.push_back(std::move(ring));
  }
  nlohmann::json j;
  j["n"] = vertex_count();
  j["rotations"] = std::move(rotations);
  return j.dump();
}

RotationMap RotationMap::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  RotationMap map(n);
  const auto& rotations = j.at("rotations");
  if (static_cast<int>(rotations.size()) != n)
    throw std::invalid_argument("rotations array size must equal n");
  // First pass: create one dart pair per undirected edge.
  std::map<std::pair<Vertex, Vertex>, Dart> pending;  // (u,v) u<v -> dart u->v
  std::vector<std::vector<Dart>> ring_darts(n);
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& t : rotations[v]) {
      Vertex w = t.get<Vertex>();
      if (w < 0 || w >= n || w == v) throw std::invalid_argument("bad rotation target");
      auto key = std::minmax(v, w);
      auto it = pending.find({key.first, key.second});
      Dart d;
      if (it == pending.end()) {
        d = map.new_dart_pair(v, w);
        pending.emplace(std::make_pair(key.first, key.second), d);
      } else {
        Dart first = it->second;
        if (map.origin(first) == v)
          throw std::invalid_argument("edge listed twice at one endpoint");
        d = twin(first);
        pending.erase(it);
      }
      ring_darts[v].push_back(d);
      map.dsu_union(v, w);
    }
  }
  if (!pending.empty())
    throw std::invalid_argument("half-edge without twin: edge missing at one endpoint");
  for (Vertex v = 0; v < n; ++v) {
    const auto& ring = ring_darts[v];
    const int deg = static_cast<int>(ring.size());
    map.degree_[v] = deg;
    if (deg == 0) continue;
    map.first_dart_[v] = ring[0];
    for (int i = 0; i < deg; ++i) {
      map.darts_[ring[i]].next = ring[(i + 1) % deg];
      map.darts_[ring[i]].prev = ring[(i + deg - 1) % deg];
    }
  }
  for (Dart d = 0; d < static_cast<Dart>(map.darts_.size()); ++d) {
    if (map.darts_[d].face == kNoFace) map.assign_face(d);
  }
  return map;
}

}  // namespace maxplanar
