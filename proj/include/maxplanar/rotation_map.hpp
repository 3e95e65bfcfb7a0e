#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maxplanar/graph.hpp"

namespace maxplanar {

using Dart = std::int32_t;
using FaceId = std::int32_t;

inline constexpr Dart kNoDart = -1;
inline constexpr FaceId kNoFace = -1;

// Combinatorial planar embedding: a cyclic order of half-edges (darts) around
// every vertex. Darts come in twin pairs (d, d^1). The walk of a face steps
// to the cyclic successor of the twin, so the darts partition into face
// orbits and faces carry stable ids across insertions: an insertion retires
// the ids it touches and mints ids for the faces it creates.
//
// Mutations keep the map planar by construction: a path may be inserted
// between two corners of one face (splitting it in two) or between corners in
// two different components (merging their faces into one).
class RotationMap {
 public:
  explicit RotationMap(int vertex_count);

  int vertex_count() const { return static_cast<int>(first_dart_.size()); }
  int edge_count() const { return static_cast<int>(darts_.size() / 2); }
  int degree(Vertex v) const { return degree_[v]; }

  Vertex origin(Dart d) const { return darts_[d].origin; }
  Vertex head(Dart d) const { return darts_[twin(d)].origin; }
  static Dart twin(Dart d) { return d ^ 1; }
  Dart rot_next(Dart d) const { return darts_[d].next; }
  Dart rot_prev(Dart d) const { return darts_[d].prev; }
  Dart face_next(Dart d) const { return darts_[twin(d)].next; }
  FaceId face_of(Dart d) const { return darts_[d].face; }

  bool face_alive(FaceId f) const { return face_rep_[f] != kNoDart; }
  int face_length(FaceId f) const { return face_len_[f]; }
  std::vector<FaceId> live_faces() const;
  int live_face_count() const { return live_face_count_; }

  // Boundary walk starting from the face's lowest dart id (a stable,
  // insertion-independent anchor).
  Dart canonical_dart(FaceId f) const;
  std::vector<Dart> face_darts(FaceId f) const;
  std::vector<Vertex> face_vertices(FaceId f) const;

  // First dart on the walk of f whose origin is v, or kNoDart. Unambiguous
  // whenever the face is a simple cycle.
  Dart find_corner(FaceId f, Vertex v) const;

  // Embeds a cycle on currently isolated vertices as its own component.
  // Returns the two created faces; `inner` is the orbit walking the vertices
  // in the given order.
  struct CycleFaces {
    FaceId inner;
    FaceId outer;
  };
  CycleFaces add_cycle(std::span<const Vertex> cycle);

  // Inserts the path origin(corner_a) -> interior... -> origin(corner_b),
  // splicing the new darts into the two corners. Interior vertices must be
  // isolated. If both corners lie on one face it is split; `face_a` is the
  // side keeping corner_a's dart (it carries the reversed path) and `face_b`
  // the side keeping corner_b's. If the corners lie on faces of two distinct
  // components the faces merge and face_a == face_b.
  struct PathResult {
    bool merged = false;
    FaceId face_a = kNoFace;
    FaceId face_b = kNoFace;
    std::vector<Dart> path;  // forward darts, origin(corner_a) first
  };
  PathResult insert_path(Dart corner_a, Dart corner_b,
                         std::span<const Vertex> interior);

  bool same_component(Vertex u, Vertex v) const;

  // Extracts the underlying simple graph.
  SimpleGraph to_graph() const;

  // Structural self-check: twin pairing, rotation cycles, face partition,
  // sum of face lengths == 2E, and V - E + F == 2 per edge-bearing component.
  // Returns a diagnostic string, empty when everything holds.
  std::string check_invariants() const;

  // JSON: {"n": int, "rotations": [[neighbor ids in cyclic order], ...]}.
  std::string to_json() const;
  static RotationMap from_json(const std::string& text);

 private:
  struct DartRec {
    Vertex origin = -1;
    Dart next = kNoDart;
    Dart prev = kNoDart;
    FaceId face = kNoFace;
  };

  Dart new_dart_pair(Vertex u, Vertex v);
  // Splices dart e into the corner before walk-dart d (same origin).
  void splice_before(Dart e, Dart d);
  // Installs a fresh face id over the orbit of d; returns the id.
  FaceId assign_face(Dart d);
  void retire_face(FaceId f);
  int dsu_find(int x) const;
  void dsu_union(int a, int b);

  std::vector<DartRec> darts_;
  std::vector<Dart> first_dart_;
  std::vector<int> degree_;
  std::vector<Dart> face_rep_;
  std::vector<int> face_len_;
  int live_face_count_ = 0;
  mutable std::vector<int> dsu_parent_;
};

}  // namespace maxplanar
