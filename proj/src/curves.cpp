#include "seifalt/curves.hpp"

#include <algorithm>
#include <set>

namespace seifalt {

std::vector<VertexId> path_vertices(const SurfaceComplex& c, const EdgePath& path, bool closed) {
  std::vector<VertexId> vs;
  for (Dart d : path) vs.push_back(c.dart_tail(d));
  if (!closed && !path.empty()) vs.push_back(c.dart_head(path.back()));
  return vs;
}

bool path_chains(const SurfaceComplex& c, const EdgePath& path, bool closed) {
  if (path.empty()) return false;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (c.dart_head(path[i]) != c.dart_tail(path[i + 1])) return false;
  }
  if (closed && c.dart_head(path.back()) != c.dart_tail(path.front())) return false;
  return true;
}

void validate_cycle(const SurfaceComplex& c, const EdgePath& cycle) {
  if (cycle.empty()) fail(ErrorKind::CurveNotEmbedded, "empty cycle");
  if (!path_chains(c, cycle, true)) fail(ErrorKind::CurveNotEmbedded, "cycle does not chain");
  std::set<EdgeId> edges;
  for (Dart d : cycle) {
    if (!edges.insert(dart_edge(d)).second) fail(ErrorKind::CurveNotEmbedded, "cycle repeats an edge");
  }
  std::set<VertexId> vs;
  for (VertexId v : path_vertices(c, cycle, true)) {
    if (!vs.insert(v).second) fail(ErrorKind::CurveNotEmbedded, "cycle repeats a vertex");
  }
}

void validate_interior_cycle(const SurfaceComplex& c, const EdgePath& cycle) {
  validate_cycle(c, cycle);
  auto uses = c.edge_uses();
  const auto cycle_vertices = path_vertices(c, cycle, true);
  const std::set<VertexId> on_cycle(cycle_vertices.begin(), cycle_vertices.end());
  for (Dart d : cycle) {
    if (uses.at(dart_edge(d)).size() != 2) {
      fail(ErrorKind::CurveTouchesBoundary, "cycle uses a free edge");
    }
  }
  for (const auto& [e, u] : uses) {
    if (u.size() != 1) continue;
    const EdgeRec& rec = c.edge(e);
    if (on_cycle.count(rec.tail) || on_cycle.count(rec.head)) {
      fail(ErrorKind::CurveTouchesBoundary, "cycle vertex lies on the boundary");
    }
  }
}

void validate_proper_arc(const SurfaceComplex& c, const EdgePath& arc) {
  if (arc.empty()) fail(ErrorKind::CurveNotEmbedded, "empty arc");
  if (!path_chains(c, arc, false)) fail(ErrorKind::CurveNotEmbedded, "arc does not chain");
  std::set<EdgeId> edges;
  for (Dart d : arc) {
    if (!edges.insert(dart_edge(d)).second) fail(ErrorKind::CurveNotEmbedded, "arc repeats an edge");
  }
  auto vs = path_vertices(c, arc, false);
  std::set<VertexId> seen;
  for (VertexId v : vs) {
    if (!seen.insert(v).second) fail(ErrorKind::CurveNotEmbedded, "arc repeats a vertex");
  }
  auto uses = c.edge_uses();
  for (Dart d : arc) {
    if (uses.at(dart_edge(d)).size() != 2) fail(ErrorKind::CurveNotEmbedded, "arc runs along the boundary");
  }
  auto boundary_status = [&](VertexId v) {
    for (const auto& [e, u] : uses) {
      if (u.size() != 1) continue;
      const EdgeRec& rec = c.edge(e);
      if (rec.tail == v || rec.head == v) return true;
    }
    return false;
  };
  if (!boundary_status(vs.front()) || !boundary_status(vs.back())) {
    fail(ErrorKind::CurveNotEmbedded, "arc endpoint not on the boundary");
  }
  for (size_t i = 1; i + 1 < vs.size(); ++i) {
    if (boundary_status(vs[i])) fail(ErrorKind::CurveNotEmbedded, "arc interior touches the boundary");
  }
}

bool paths_vertex_disjoint(const SurfaceComplex& c, const EdgePath& a, bool a_closed,
                           const EdgePath& b, bool b_closed) {
  auto va = path_vertices(c, a, a_closed);
  auto vb = path_vertices(c, b, b_closed);
  std::set<VertexId> sa(va.begin(), va.end());
  for (VertexId v : vb) {
    if (sa.count(v)) return false;
  }
  return true;
}

EdgePath reverse_path(const EdgePath& path) {
  EdgePath out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(dart_flip(*it));
  return out;
}

EdgePath canonical_rotation(const EdgePath& cycle) {
  if (cycle.empty()) return cycle;
  size_t best = 0;
  for (size_t i = 1; i < cycle.size(); ++i) {
    if (dart_edge(cycle[i]) < dart_edge(cycle[best])) best = i;
  }
  EdgePath out(cycle.begin() + best, cycle.end());
  out.insert(out.end(), cycle.begin(), cycle.begin() + best);
  return out;
}

}  // namespace seifalt
