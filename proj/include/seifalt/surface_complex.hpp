#pragma once

// Face-glued polygon schemas for compact surfaces.
//
// A SurfaceComplex is a set of vertices, edges (each with tail/head vertex)
// and faces (cyclic words of directed edge references).  An edge appearing in
// face words once is free (boundary); twice, interior.  Everything downstream
// (surgery, alteration, transport) is cut-and-paste on this structure, so the
// representation is exact and integer-only; there are no coordinates.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seifalt/errors.hpp"

namespace seifalt {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

// Directed reference to an edge inside a face word: +(e+1) forward (tail to
// head), -(e+1) reversed.  Also used for steps of edge paths.
using Dart = int;

inline Dart make_dart(EdgeId e, bool reversed) { return reversed ? -(e + 1) : (e + 1); }
inline EdgeId dart_edge(Dart d) { return (d > 0 ? d : -d) - 1; }
inline bool dart_reversed(Dart d) { return d < 0; }
inline Dart dart_flip(Dart d) { return -d; }

struct EdgeRec {
  VertexId tail = -1;
  VertexId head = -1;
  bool operator==(const EdgeRec&) const = default;
};

// Homeomorphism type of one connected component.  For non-orientable
// components `genus` counts crosscaps.
struct SurfaceType {
  bool orientable = true;
  int genus = 0;
  int boundary = 0;

  auto operator<=>(const SurfaceType&) const = default;
};

std::string to_string(const SurfaceType& t);
std::string to_string(const std::vector<SurfaceType>& ts);

// First Betti number of a connected surface of this type.
int first_betti(const SurfaceType& t);

// Chained sequence of darts.  Closed (cycle) or open (arc) depending on use.
using EdgePath = std::vector<Dart>;

// Where one edge occurs inside the face dictionary.
struct EdgeUse {
  FaceId face = -1;
  int index = -1;  // position in the face word
};

// One end of an edge (0 = tail, 1 = head), used for vertex-link queries.
struct EdgeEndRef {
  EdgeId edge = -1;
  int end = 0;
  auto operator<=>(const EdgeEndRef&) const = default;
};

class SurfaceComplex {
 public:
  SurfaceComplex() = default;

  // --- low-level construction -------------------------------------------
  VertexId add_vertex();
  EdgeId add_edge(VertexId tail, VertexId head);
  FaceId add_face(const std::vector<Dart>& word);
  void remove_face(FaceId f);
  // Removes an edge that no face references (both endpoints kept).
  void remove_edge(EdgeId e);
  void remove_vertex(VertexId v);
  // Rewires one endpoint of an edge (end: 0 tail, 1 head).
  void set_edge_endpoint(EdgeId e, int end, VertexId v);
  void set_face_word(FaceId f, const std::vector<Dart>& word);
  // Inserts all cells of `other`, keeping their ids (which must not collide).
  void absorb(const SurfaceComplex& other);

  // --- accessors -----------------------------------------------------------
  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::map<EdgeId, EdgeRec>& edges() const { return edges_; }
  const std::map<FaceId, std::vector<Dart>>& faces() const { return faces_; }

  bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) > 0; }
  bool has_face(FaceId f) const { return faces_.count(f) > 0; }

  const EdgeRec& edge(EdgeId e) const;
  const std::vector<Dart>& face_word(FaceId f) const;

  VertexId dart_tail(Dart d) const;
  VertexId dart_head(Dart d) const;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  // --- structure queries ----------------------------------------------------
  // Map edge -> its (one or two) uses in face words.
  std::map<EdgeId, std::vector<EdgeUse>> edge_uses() const;

  bool is_free_edge(EdgeId e) const;  // exactly one face use
  bool is_boundary_vertex(VertexId v) const;

  int euler_characteristic() const;

  // Connected components as cell id sets (vertices, edges, faces).
  struct Component {
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;
    std::set<FaceId> faces;
  };
  std::vector<Component> components() const;

  // Per-face orientation signs making every interior edge traversed once in
  // each direction, or nullopt when the complex is non-orientable.
  std::optional<std::map<FaceId, int>> orientation() const;
  bool is_orientable() const;

  // Boundary circles, each as a chained closed path of free-edge darts.
  // Direction: the orientation-adjusted face traversal of the free edges,
  // i.e. the induced boundary orientation (surface on the left) when the
  // complex is orientable.  Trace start is the minimal free edge id.
  std::vector<EdgePath> boundary_circles() const;

  // Classification of each connected component, sorted canonically
  // (orientable first, then genus, then boundary count).
  std::vector<SurfaceType> classify() const;

  struct ClassifiedComponent {
    SurfaceType type;
    Component cells;
  };
  std::vector<ClassifiedComponent> classify_components() const;

  // Connected pieces of the link of v: edge-ends grouped by face-corner
  // adjacency.  A valid surface has exactly one piece per vertex; during a
  // cut, split vertices momentarily have two.
  std::vector<std::vector<EdgeEndRef>> vertex_link_components(VertexId v) const;

  // Throws InvalidComplex / NotASurface when the structure is not a
  // well-formed surface complex.
  void validate() const;

  // --- refinement ------------------------------------------------------------
  // Splits edge e into `parts` chained edges (first keeps the id).  Returns
  // the chain as a forward path; face words rewritten in place.
  EdgePath subdivide_edge(EdgeId e, int parts);

  // Stellar subdivision of every face plus subdivision of every edge; same
  // homeomorphism type, different cell structure.
  SurfaceComplex refined() const;

  // Cells of one component, ids preserved.
  SurfaceComplex restricted_to(const Component& comp) const;

  // Fresh copy with all ids shifted by the given offsets (used for disjoint
  // unions).  Mapping tables are filled when non-null.
  SurfaceComplex renumbered(int vertex_offset, int edge_offset, int face_offset,
                            std::map<VertexId, VertexId>* vmap = nullptr,
                            std::map<EdgeId, EdgeId>* emap = nullptr,
                            std::map<FaceId, FaceId>* fmap = nullptr) const;

  int next_vertex_id() const { return next_vertex_; }
  int next_edge_id() const { return next_edge_; }
  int next_face_id() const { return next_face_; }

  bool operator==(const SurfaceComplex& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ && faces_ == other.faces_;
  }

 private:
  std::set<VertexId> vertices_;
  std::map<EdgeId, EdgeRec> edges_;
  std::map<FaceId, std::vector<Dart>> faces_;
  int next_vertex_ = 0;
  int next_edge_ = 0;
  int next_face_ = 0;

  friend struct ComplexSurgeon;
};

// --- canonical small complexes ------------------------------------------------

// Disk: one n-gon face, n >= 1, all edges free.
SurfaceComplex make_disk(int n);
// Sphere: two n-gon faces glued along all edges.
SurfaceComplex make_sphere(int n);
// Annulus with both boundary circles of length n.
SurfaceComplex make_annulus(int n);
// Annulus built as a ladder with `rings` interior parallel circles.
SurfaceComplex make_ladder_annulus(int n, int rings);
// Torus from the standard square schema.
SurfaceComplex make_torus();
// Orientable genus-g surface with b boundary circles (g, b >= 0, not both 0
// excluded: g = 0, b = 0 gives a sphere).
SurfaceComplex make_orientable_surface(int genus, int boundary);

}  // namespace seifalt
