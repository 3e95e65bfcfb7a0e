#pragma once

#include <optional>
#include <map>
#include <string>
#include <vector>

#include "maxplanar/rotation_map.hpp"

namespace maxplanar {

// Reference to a template vertex: either a position on the host boundary
// walk (path == kBoundaryPath) or the `index`-th vertex along a previously
// inserted path, counting from that path's `from` endpoint.
struct TemplateVertexRef {
  int path = -1;
  int index = 0;
};
inline constexpr int kBoundaryPath = -1;

enum class Side { kFrom, kTo };

// Which face an insertion goes into: the root (host) face, or one of the two
// sides produced by an earlier insertion of the same template.
struct TemplateFaceRef {
  int insertion = -1;  // kRootFace or an earlier insertion index
  Side side = Side::kFrom;
};
inline constexpr int kRootFace = -1;

// One path insertion: a path of `length` edges between two existing template
// vertices, placed inside the referenced face. Interior vertices are fresh.
struct PathInsertion {
  int stage = 0;  // sequential phase; builders map phases onto edge layers
  TemplateFaceRef host;
  TemplateVertexRef from;
  TemplateVertexRef to;
  int length = 1;
  int label = 0;  // figure label carried by the inserted interior vertices
};

struct LabelMark {
  int label = 0;
  TemplateVertexRef at;
};

struct RecursionFaceSpec {
  int insertion = 0;
  Side side = Side::kFrom;
};

// Concentric-ring structure of the odd-girth construction: M cycles of
// length g, consecutive cycles joined by g straight and g diagonal paths of
// length k = (g-1)/2 each.
struct RingSpec {
  int girth = 5;
  int cycle_count = 2;
  int path_length() const { return (girth - 1) / 2; }
  long long vertex_count() const {
    long long g = girth, m = cycle_count;
    return m * g + (m - 1) * g * (g - 3);
  }
};

// Parametric template for the recursive structures of the constructions:
// either a list of path insertions into a g-face, or a ring spec.
struct GadgetTemplate {
  int girth = 4;
  int boundary_length = 0;  // 0 for ring templates
  int stage_count = 0;
  std::vector<PathInsertion> insertions;
  std::vector<RecursionFaceSpec> recursion_faces;
  std::vector<LabelMark> marks;  // named single vertices (even/odd figures)
  std::optional<RingSpec> ring;

  int interior_vertex_count() const;
  // Label -> vertex count over boundary (label 1) and inserted vertices.
  std::map<int, int> label_counts() const;
};

// The 19-vertex quadrangulation gadget: 4-cycle boundary, 15 interior
// vertices inserted as single-vertex (length 2) paths in five steps, four
// recursion faces.
GadgetTemplate bipartite_gadget();

// Even-girth gadget for g >= 6: six paths of length g/2 inserted in four
// stages, seven interior faces of length g, two recursion faces. The variant
// is picked by g mod 4.
GadgetTemplate even_gadget(int g);

// Ring template for odd girth.
GadgetTemplate odd_ring(const RingSpec& spec);

// Final insertion pattern for odd girth: a path of length k+1 from an anchor
// to one antipodal vertex, then a path of length k from the anchor's path
// neighbour to the other; splits one g-face into three, consuming g-2
// vertices.
GadgetTemplate odd_insertion_pattern(int g);

// Bookkeeping for one template copy placed in a live map: concrete vertices
// behind boundary positions and inserted paths, and the face pair produced
// by each insertion.
struct TemplateCopy {
  FaceId root_face = kNoFace;
  std::vector<Vertex> boundary;
  std::vector<std::vector<Vertex>> path_verts;   // per insertion, w_0..w_len
  std::vector<std::pair<FaceId, FaceId>> faces;  // per insertion, (from, to)

  Vertex resolve_vertex(const TemplateVertexRef& ref) const;
  FaceId resolve_face(const TemplateFaceRef& ref) const;
  FaceId resolve_recursion_face(const RecursionFaceSpec& spec) const;
};

// Applies insertion `idx` of the template to the map, with the given interior
// vertices (must be isolated, exactly length-1 of them). Updates the copy.
void apply_insertion(RotationMap& map, TemplateCopy& copy,
                     const GadgetTemplate& tmpl, int idx,
                     std::span<const Vertex> interior);

// Wires one annulus of the ring construction between consecutive cycles.
// `inner_face` is the designated face of the outer cycle, `outer_face` the
// untouched face of the inner cycle; `straight[j]` and `diagonal[j]` supply
// the path interiors (k-1 vertices each).
void wire_ring_gap(RotationMap& map, const std::vector<Vertex>& cycle_a,
                   const std::vector<Vertex>& cycle_b, FaceId inner_face,
                   FaceId outer_face,
                   const std::vector<std::vector<Vertex>>& straight,
                   const std::vector<std::vector<Vertex>>& diagonal);

// Standalone instantiation on fresh vertices (boundary first, then path
// interiors in insertion order; rings enumerate cycle vertices first).
struct InstantiatedGadget {
  RotationMap map;
  TemplateCopy copy;
  std::vector<FaceId> recursion_faces;
};
InstantiatedGadget instantiate_standalone(const GadgetTemplate& tmpl);

struct GadgetValidation {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

// Instantiates the template inside a standalone g-cycle (or as a standalone
// ring) and checks map validity, the all-faces-length-g invariant, presence
// of the declared recursion faces, and bipartiteness when g is even.
GadgetValidation validate_gadget(const GadgetTemplate& tmpl, int g);

// JSON dump of the instantiated template: labeled vertices, edges, and the
// recursion-face walks. For documentation and golden-file tests.
std::string template_to_json(const GadgetTemplate& tmpl);

}  // namespace maxplanar
