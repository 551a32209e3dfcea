#include "seifalt/surface_ops.hpp"

#include <algorithm>
#include <set>

namespace seifalt {

namespace {

// Shared edge-duplication + vertex-split machinery for cuts.  `closed`
// selects cycle vs proper-arc semantics.
struct CutCore {
  SurfaceComplex c;
  EdgePath side_a;
  EdgePath side_b;
  std::map<EdgeId, std::pair<EdgeId, EdgeId>> edge_sides;
  std::map<VertexId, std::pair<VertexId, VertexId>> vertex_sides;
};

CutCore cut_core(const SurfaceComplex& input, const EdgePath& path, bool closed) {
  CutCore out;
  out.c = input;
  SurfaceComplex& c = out.c;

  auto uses = c.edge_uses();

  // Duplicate every path edge, one copy per face-use.  Copy labels are
  // provisional; the two coherent sides are identified afterwards by tracing
  // the fresh boundary, and side a is the one carrying the canonical
  // (smallest face-use) copy of the first path edge.  This anchors side
  // semantics to data that survives any disjoint operation, unlike a global
  // orientation normalization.
  std::vector<EdgeId> a_edges, b_edges;
  for (Dart d : path) {
    const EdgeId e = dart_edge(d);
    auto u = uses.at(e);
    if (u.size() != 2) fail(ErrorKind::CurveTouchesBoundary, "cut edge is free");
    std::sort(u.begin(), u.end(), [](const EdgeUse& x, const EdgeUse& y) {
      return std::tie(x.face, x.index) < std::tie(y.face, y.index);
    });
    const EdgeRec rec = c.edge(e);
    const EdgeId ea = c.add_edge(rec.tail, rec.head);
    const EdgeId eb = c.add_edge(rec.tail, rec.head);
    for (int k = 0; k < 2; ++k) {
      const EdgeUse& use = u[k];
      const Dart written = c.face_word(use.face)[use.index];
      std::vector<Dart> word = c.face_word(use.face);
      word[use.index] = make_dart(k == 0 ? ea : eb, dart_reversed(written));
      c.set_face_word(use.face, word);
    }
    c.remove_edge(e);
    a_edges.push_back(ea);
    b_edges.push_back(eb);
    out.edge_sides[e] = {ea, eb};
  }

  // Split path vertices along their (now severed) links.  Original vertex
  // ids were captured before mutation via the a-side copies, whose endpoints
  // are still the originals at this point.
  std::vector<VertexId> path_verts;
  for (size_t i = 0; i < path.size(); ++i) {
    path_verts.push_back(dart_reversed(path[i]) ? c.edge(a_edges[i]).head : c.edge(a_edges[i]).tail);
  }
  if (!closed) {
    const Dart last = path.back();
    path_verts.push_back(dart_reversed(last) ? c.edge(a_edges.back()).tail : c.edge(a_edges.back()).head);
  }

  for (size_t j = 0; j < path_verts.size(); ++j) {
    const VertexId v = path_verts[j];
    auto comps = c.vertex_link_components(v);
    if (comps.size() != 2) {
      fail(ErrorKind::CurveNotEmbedded,
           "cut does not split vertex " + std::to_string(v) + " into two sides");
    }
    const VertexId va = c.add_vertex();
    const VertexId vb = c.add_vertex();
    for (int k = 0; k < 2; ++k) {
      const VertexId target = (k == 0) ? va : vb;
      for (const EdgeEndRef& end : comps[k]) c.set_edge_endpoint(end.edge, end.end, target);
    }
    c.remove_vertex(v);
    out.vertex_sides[v] = {va, vb};
  }

  // Group the provisional copies into the two coherent sides by walking
  // shared split vertices; side a is the group holding the canonical
  // (smallest face-use) copy of the minimal path edge.  The anchor ignores
  // the path direction, so a side means the same thing however the cycle is
  // handed in.
  const size_t k = path.size();
  std::vector<int> group(2 * k, -1);  // copy index: 2i = a_edges[i], 2i+1 = b
  auto endpoint_of = [&](size_t copy_idx, bool head) {
    const EdgeId e = (copy_idx % 2 == 0) ? a_edges[copy_idx / 2] : b_edges[copy_idx / 2];
    return head ? c.edge(e).head : c.edge(e).tail;
  };
  std::map<VertexId, std::vector<size_t>> at_vertex;
  for (size_t i = 0; i < 2 * k; ++i) {
    at_vertex[endpoint_of(i, false)].push_back(i);
    at_vertex[endpoint_of(i, true)].push_back(i);
  }
  std::vector<size_t> stack;
  group[0] = 0;
  stack.push_back(0);
  while (!stack.empty()) {
    const size_t cur = stack.back();
    stack.pop_back();
    for (bool head : {false, true}) {
      const VertexId v = endpoint_of(cur, head);
      for (size_t other : at_vertex.at(v)) {
        if (other == cur) continue;
        // Copies share a split vertex only within one side.
        if (group[other] == -1) {
          group[other] = group[cur];
          stack.push_back(other);
        }
      }
    }
  }
  for (size_t i = 0; i < 2 * k; ++i) {
    if (group[i] == -1) group[i] = 1;
  }
  size_t anchor = 0;
  for (size_t i = 1; i < k; ++i) {
    if (dart_edge(path[i]) < dart_edge(path[anchor])) anchor = i;
  }
  const int side_a_group = group[2 * anchor];
  for (size_t i = 0; i < k; ++i) {
    const bool a_first = group[2 * i] == side_a_group;
    if (group[2 * i] == group[2 * i + 1]) {
      fail(ErrorKind::CurveOneSided, "cut copies do not separate into two sides");
    }
    const EdgeId side_a_edge = a_first ? a_edges[i] : b_edges[i];
    const EdgeId side_b_edge = a_first ? b_edges[i] : a_edges[i];
    out.side_a.push_back(make_dart(side_a_edge, dart_reversed(path[i])));
    out.side_b.push_back(make_dart(side_b_edge, dart_reversed(path[i])));
    out.edge_sides[dart_edge(path[i])] = {side_a_edge, side_b_edge};
  }
  // Re-anchor vertex side pairs to the final grouping.
  for (size_t i = 0; i < k; ++i) {
    const VertexId orig = path_verts[i];
    const VertexId va = dart_reversed(out.side_a[i]) ? c.edge(dart_edge(out.side_a[i])).head
                                                     : c.edge(dart_edge(out.side_a[i])).tail;
    const VertexId vb = dart_reversed(out.side_b[i]) ? c.edge(dart_edge(out.side_b[i])).head
                                                     : c.edge(dart_edge(out.side_b[i])).tail;
    out.vertex_sides[orig] = {va, vb};
  }
  if (!closed) {
    const VertexId orig = path_verts.back();
    out.vertex_sides[orig] = {c.dart_head(out.side_a.back()), c.dart_head(out.side_b.back())};
  }
  if (!path_chains(c, out.side_a, closed) || !path_chains(c, out.side_b, closed)) {
    fail(ErrorKind::CurveOneSided, "cut copies do not close up into two sides");
  }
  if (strict_validation()) c.validate();
  return out;
}

}  // namespace

CutResult cut_along_cycle(const SurfaceComplex& c, const EdgePath& cycle) {
  validate_interior_cycle(c, cycle);
  CutCore core = cut_core(c, cycle, true);
  return CutResult{std::move(core.c), std::move(core.side_a), std::move(core.side_b),
                   std::move(core.edge_sides), std::move(core.vertex_sides)};
}

CutArcResult cut_along_arc(const SurfaceComplex& c, const EdgePath& arc) {
  validate_proper_arc(c, arc);
  CutCore core = cut_core(c, arc, false);
  return CutArcResult{std::move(core.c), std::move(core.side_a), std::move(core.side_b),
                      std::move(core.edge_sides), std::move(core.vertex_sides)};
}

DisjointUnionResult disjoint_union(const SurfaceComplex& a, const SurfaceComplex& b) {
  DisjointUnionResult out;
  out.complex = a;
  SurfaceComplex shifted =
      b.renumbered(a.next_vertex_id(), a.next_edge_id(), a.next_face_id(), &out.vmap, &out.emap, &out.fmap);
  out.complex.absorb(shifted);
  return out;
}

EdgePath boundary_circle_by_label(const SurfaceComplex& c, EdgeId label) {
  for (const EdgePath& circle : c.boundary_circles()) {
    if (boundary_circle_label(circle) == label) return circle;
  }
  fail(ErrorKind::LabelUnknown, "no boundary circle labelled " + std::to_string(label));
}

EdgeId boundary_circle_label(const EdgePath& circle) {
  EdgeId label = dart_edge(circle.front());
  for (Dart d : circle) label = std::min(label, dart_edge(d));
  return label;
}

EdgePath refine_circle_to_length(SurfaceComplex& c, const EdgePath& circle, int target) {
  const int len = static_cast<int>(circle.size());
  if (target < len) fail(ErrorKind::LengthMismatchUnrefinable, "cannot shorten a circle");
  if (target == len) return circle;
  EdgePath out = circle;
  const Dart first = out.front();
  EdgePath chain = c.subdivide_edge(dart_edge(first), target - len + 1);
  if (dart_reversed(first)) chain = reverse_path(chain);
  EdgePath refined(chain.begin(), chain.end());
  refined.insert(refined.end(), out.begin() + 1, out.end());
  return refined;
}

GlueResult glue_boundary_circles(const SurfaceComplex& cin, const EdgePath& circle_a,
                                 const EdgePath& circle_b, bool reversed) {
  SurfaceComplex c = cin;
  auto uses = c.edge_uses();
  for (const EdgePath* p : {&circle_a, &circle_b}) {
    for (Dart d : *p) {
      if (uses.at(dart_edge(d)).size() != 1) fail(ErrorKind::InvalidArgument, "glue path not free");
    }
  }
  {
    std::set<EdgeId> ea;
    for (Dart d : circle_a) ea.insert(dart_edge(d));
    for (Dart d : circle_b) {
      if (ea.count(dart_edge(d))) fail(ErrorKind::InvalidArgument, "cannot glue a circle to itself");
    }
    if (!paths_vertex_disjoint(c, circle_a, true, circle_b, true)) {
      fail(ErrorKind::InvalidArgument, "glue circles share a vertex");
    }
  }
  const int L = std::max(circle_a.size(), circle_b.size());
  EdgePath a = refine_circle_to_length(c, circle_a, L);
  EdgePath b = refine_circle_to_length(c, circle_b, L);

  // b-darts re-oriented along a.
  EdgePath q(L);
  for (int i = 0; i < L; ++i) q[i] = reversed ? b[i] : dart_flip(b[L - 1 - i]);

  // Merge vertices first.
  for (int i = 0; i < L; ++i) {
    const VertexId va = c.dart_tail(a[i]);
    const VertexId vb = c.dart_tail(q[i]);
    if (va == vb) continue;
    for (const auto& [e, rec] : c.edges()) {
      if (rec.tail == vb) c.set_edge_endpoint(e, 0, va);
      if (c.edge(e).head == vb) c.set_edge_endpoint(e, 1, va);
    }
    c.remove_vertex(vb);
  }
  // Then merge edges, rewriting the b-side face uses.
  auto uses2 = c.edge_uses();
  for (int i = 0; i < L; ++i) {
    const EdgeId ea = dart_edge(a[i]);
    const EdgeId eb = dart_edge(q[i]);
    const EdgeUse use = uses2.at(eb).front();
    const Dart written = c.face_word(use.face)[use.index];
    const bool same_dir = dart_reversed(written) == dart_reversed(q[i]);
    std::vector<Dart> word = c.face_word(use.face);
    word[use.index] = make_dart(ea, same_dir ? dart_reversed(a[i]) : !dart_reversed(a[i]));
    c.set_face_word(use.face, word);
    c.remove_edge(eb);
  }
  if (strict_validation()) c.validate();
  return GlueResult{std::move(c), a};
}

GlueResult glue_boundary_circles(const SurfaceComplex& a, EdgeId label_a, const SurfaceComplex& b,
                                 EdgeId label_b, bool reversed) {
  (void)boundary_circle_by_label(a, label_a);
  (void)boundary_circle_by_label(b, label_b);
  DisjointUnionResult u = disjoint_union(a, b);
  const EdgePath pa = boundary_circle_by_label(u.complex, label_a);
  EdgeId shifted_label = -1;
  {
    EdgePath pb_orig = boundary_circle_by_label(b, label_b);
    shifted_label = u.emap.at(boundary_circle_label(pb_orig));
  }
  // The shifted circle's minimal edge keeps the offset mapping.
  EdgePath pb;
  for (const EdgePath& circle : u.complex.boundary_circles()) {
    bool has = false;
    for (Dart d : circle) {
      if (dart_edge(d) == shifted_label) has = true;
    }
    if (has) pb = circle;
  }
  if (pb.empty()) fail(ErrorKind::LabelUnknown, "glue label lost in union");
  return glue_boundary_circles(u.complex, pa, pb, reversed);
}

GlueArcResult glue_boundary_arcs(const SurfaceComplex& cin, const EdgePath& arc_a,
                                 const EdgePath& arc_b) {
  SurfaceComplex c = cin;
  auto uses = c.edge_uses();
  for (const EdgePath* p : {&arc_a, &arc_b}) {
    if (p->empty() || !path_chains(c, *p, false)) fail(ErrorKind::InvalidArgument, "glue arc malformed");
    for (Dart d : *p) {
      if (uses.at(dart_edge(d)).size() != 1) fail(ErrorKind::InvalidArgument, "glue arc not free");
    }
  }
  if (!paths_vertex_disjoint(c, arc_a, false, arc_b, false)) {
    fail(ErrorKind::InvalidArgument, "glue arcs share a vertex");
  }
  const int L = std::max(arc_a.size(), arc_b.size());
  EdgePath a = arc_a, b = arc_b;
  if (static_cast<int>(a.size()) < L) {
    const Dart first = a.front();
    EdgePath chain = c.subdivide_edge(dart_edge(first), L - static_cast<int>(a.size()) + 1);
    if (dart_reversed(first)) chain = reverse_path(chain);
    chain.insert(chain.end(), a.begin() + 1, a.end());
    a = chain;
  }
  if (static_cast<int>(b.size()) < L) {
    const Dart first = b.front();
    EdgePath chain = c.subdivide_edge(dart_edge(first), L - static_cast<int>(b.size()) + 1);
    if (dart_reversed(first)) chain = reverse_path(chain);
    chain.insert(chain.end(), b.begin() + 1, b.end());
    b = chain;
  }
  EdgePath q(L);
  for (int i = 0; i < L; ++i) q[i] = dart_flip(b[L - 1 - i]);

  auto merge_vertex = [&c](VertexId keep, VertexId gone) {
    if (keep == gone) return;
    for (const auto& [e, rec] : c.edges()) {
      if (rec.tail == gone) c.set_edge_endpoint(e, 0, keep);
      if (c.edge(e).head == gone) c.set_edge_endpoint(e, 1, keep);
    }
    c.remove_vertex(gone);
  };
  for (int i = 0; i < L; ++i) merge_vertex(c.dart_tail(a[i]), c.dart_tail(q[i]));
  merge_vertex(c.dart_head(a[L - 1]), c.dart_head(q[L - 1]));

  auto uses2 = c.edge_uses();
  for (int i = 0; i < L; ++i) {
    const EdgeId ea = dart_edge(a[i]);
    const EdgeId eb = dart_edge(q[i]);
    const EdgeUse use = uses2.at(eb).front();
    const Dart written = c.face_word(use.face)[use.index];
    const bool same_dir = dart_reversed(written) == dart_reversed(q[i]);
    std::vector<Dart> word = c.face_word(use.face);
    word[use.index] = make_dart(ea, same_dir ? dart_reversed(a[i]) : !dart_reversed(a[i]));
    c.set_face_word(use.face, word);
    c.remove_edge(eb);
  }
  if (strict_validation()) c.validate();
  return GlueArcResult{std::move(c), a};
}

PunchResult punch_hole(const SurfaceComplex& cin, FaceId face) {
  SurfaceComplex c = cin;
  const std::vector<Dart> word = c.face_word(face);
  const int n = static_cast<int>(word.size());
  std::vector<VertexId> inner(n);
  for (int i = 0; i < n; ++i) inner[i] = c.add_vertex();
  std::vector<EdgeId> spokes(n), ring(n);
  for (int i = 0; i < n; ++i) spokes[i] = c.add_edge(c.dart_tail(word[i]), inner[i]);
  for (int i = 0; i < n; ++i) ring[i] = c.add_edge(inner[i], inner[(i + 1) % n]);
  c.remove_face(face);
  PunchResult out;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    out.collar.push_back(c.add_face(
        {word[i], make_dart(spokes[j], false), make_dart(ring[i], true), make_dart(spokes[i], true)}));
  }
  for (int i = 0; i < n; ++i) out.circle.push_back(make_dart(ring[i], false));
  if (strict_validation()) c.validate();
  out.complex = std::move(c);
  return out;
}

LadderResult glue_with_ladder(const SurfaceComplex& cin, const EdgePath& circle_a,
                              const EdgePath& circle_b, int rings, bool reversed) {
  if (rings < 0) fail(ErrorKind::InvalidArgument, "negative ring count");
  if (rings == 0) {
    GlueResult g = glue_boundary_circles(cin, circle_a, circle_b, reversed);
    LadderResult out;
    out.complex = std::move(g.complex);
    out.circle_a = g.seam;
    out.circle_b = g.seam;
    return out;
  }
  SurfaceComplex c = cin;
  auto uses = c.edge_uses();
  for (const EdgePath* p : {&circle_a, &circle_b}) {
    for (Dart d : *p) {
      if (uses.at(dart_edge(d)).size() != 1) fail(ErrorKind::InvalidArgument, "ladder circle not free");
    }
  }
  const int L = std::max(circle_a.size(), circle_b.size());
  EdgePath a = refine_circle_to_length(c, circle_a, L);
  EdgePath b = refine_circle_to_length(c, circle_b, L);
  EdgePath q(L);
  for (int i = 0; i < L; ++i) q[i] = reversed ? b[i] : dart_flip(b[L - 1 - i]);

  // Layer vertices: 0 = circle a, rings+1 = circle b.
  std::vector<std::vector<VertexId>> layer(rings + 2, std::vector<VertexId>(L));
  for (int i = 0; i < L; ++i) layer[0][i] = c.dart_tail(a[i]);
  for (int i = 0; i < L; ++i) layer[rings + 1][i] = c.dart_tail(q[i]);
  for (int r = 1; r <= rings; ++r) {
    for (int i = 0; i < L; ++i) layer[r][i] = c.add_vertex();
  }
  // Horizontal darts per layer.
  std::vector<std::vector<Dart>> horiz(rings + 2, std::vector<Dart>(L));
  horiz[0] = a;
  horiz[rings + 1] = q;
  std::vector<std::vector<EdgeId>> ring_edges(rings + 1, std::vector<EdgeId>(L));
  for (int r = 1; r <= rings; ++r) {
    for (int i = 0; i < L; ++i) {
      ring_edges[r][i] = c.add_edge(layer[r][i], layer[r][(i + 1) % L]);
      horiz[r][i] = make_dart(ring_edges[r][i], false);
    }
  }
  // Rungs between consecutive layers.
  std::vector<std::vector<EdgeId>> rung(rings + 2, std::vector<EdgeId>(L));
  for (int r = 1; r <= rings + 1; ++r) {
    for (int i = 0; i < L; ++i) rung[r][i] = c.add_edge(layer[r - 1][i], layer[r][i]);
  }
  for (int r = 1; r <= rings + 1; ++r) {
    for (int i = 0; i < L; ++i) {
      const int j = (i + 1) % L;
      c.add_face({horiz[r - 1][i], make_dart(rung[r][j], false), dart_flip(horiz[r][i]),
                  make_dart(rung[r][i], true)});
    }
  }
  if (strict_validation()) c.validate();
  LadderResult out;
  out.complex = std::move(c);
  for (int r = 1; r <= rings; ++r) {
    EdgePath ring_path;
    for (int i = 0; i < L; ++i) ring_path.push_back(horiz[r][i]);
    out.rings.push_back(std::move(ring_path));
  }
  out.rungs.resize(L);
  for (int i = 0; i < L; ++i) {
    for (int r = 1; r <= rings + 1; ++r) out.rungs[i].push_back(make_dart(rung[r][i], false));
  }
  out.circle_a = a;
  out.circle_b = b;
  return out;
}

ThickenResult thicken_cycle(const SurfaceComplex& cin, const EdgePath& cycle, int rings,
                            const std::vector<EdgePath>& reroute,
                            const std::vector<bool>& reroute_closed) {
  if (rings < 1) fail(ErrorKind::InvalidArgument, "thicken needs >= 1 ring");
  if (reroute.size() != reroute_closed.size()) fail(ErrorKind::InvalidArgument, "reroute size mismatch");
  {
    std::set<EdgeId> cyc;
    for (Dart d : cycle) cyc.insert(dart_edge(d));
    for (const EdgePath& p : reroute) {
      for (Dart d : p) {
        if (cyc.count(dart_edge(d))) {
          fail(ErrorKind::CurveNotEmbedded, "reroute path shares an edge with the thickened cycle");
        }
      }
    }
  }
  // Cycle positions per vertex, for rung lookup.
  std::map<VertexId, int> position;
  {
    auto vs = path_vertices(cin, cycle, true);
    for (size_t i = 0; i < vs.size(); ++i) position[vs[i]] = static_cast<int>(i);
  }

  CutResult cut = cut_along_cycle(cin, cycle);
  // Same-index pairing reglues the two copies the way they were attached.
  LadderResult ladder = glue_with_ladder(cut.complex, cut.side_a, cut.side_b, rings, true);
  SurfaceComplex& c = ladder.complex;

  ThickenResult out;
  out.rings = ladder.rings;
  out.rungs = ladder.rungs;
  out.ring_a = ladder.circle_a;
  out.ring_b = ladder.circle_b;

  // Map split copies back to positions: side paths run in cycle order.
  std::map<VertexId, int> a_copy_pos, b_copy_pos;
  for (size_t i = 0; i < ladder.circle_a.size(); ++i) {
    a_copy_pos[c.dart_tail(ladder.circle_a[i])] = static_cast<int>(i);
  }
  for (size_t i = 0; i < ladder.circle_b.size(); ++i) {
    b_copy_pos[c.dart_tail(ladder.circle_b[i])] = static_cast<int>(i);
  }

  for (size_t pi = 0; pi < reroute.size(); ++pi) {
    const EdgePath& p = reroute[pi];
    const bool closed = reroute_closed[pi];
    EdgePath fixed;
    std::vector<int> crossings;
    const size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
      fixed.push_back(p[i]);
      const bool last = (i + 1 == n);
      if (last && !closed) break;
      const Dart next = p[(i + 1) % n];
      const VertexId at = c.dart_head(p[i]);
      const VertexId want = c.dart_tail(next);
      if (at == want) continue;
      // Crossed the cut: insert the rung at this position.
      int pos = -1;
      bool from_a = false;
      if (auto it = a_copy_pos.find(at); it != a_copy_pos.end() && b_copy_pos.count(want) &&
                                         b_copy_pos.at(want) == it->second) {
        pos = it->second;
        from_a = true;
      } else if (auto it2 = b_copy_pos.find(at); it2 != b_copy_pos.end() && a_copy_pos.count(want) &&
                                                 a_copy_pos.at(want) == it2->second) {
        pos = it2->second;
        from_a = false;
      }
      if (pos < 0) fail(ErrorKind::IntersectionMismatch, "reroute path breaks away from the cut");
      const EdgePath& rungp = out.rungs[pos];
      if (from_a) {
        fixed.insert(fixed.end(), rungp.begin(), rungp.end());
      } else {
        EdgePath rev = reverse_path(rungp);
        fixed.insert(fixed.end(), rev.begin(), rev.end());
      }
      crossings.push_back(pos);
      if (last && closed) {
        // Rung appended after the final dart closes the cycle.
      }
    }
    if (!path_chains(c, fixed, closed)) {
      fail(ErrorKind::IntersectionMismatch, "reroute failed to restore a chained path");
    }
    out.rerouted.push_back(std::move(fixed));
    out.crossings.push_back(std::move(crossings));
  }
  out.complex = std::move(ladder.complex);
  return out;
}

InscribeResult inscribe_circle(const SurfaceComplex& c, FaceId face) {
  PunchResult p = punch_hole(c, face);
  auto [capped, inner] = cap_with_disk(p.complex, p.circle);
  return InscribeResult{std::move(capped), p.circle, inner, std::move(p.collar)};
}

int side_sign(const SurfaceComplex& c, const EdgePath& cycle, FaceId face) {
  // Run the cut on a scratch copy and see which side's copies land in the
  // face's rewritten word.  This matches exactly what a later alteration
  // will do, independent of any orientation normalization.
  CutResult cut = cut_along_cycle(c, cycle);
  std::set<EdgeId> side_a_edges;
  for (Dart d : cut.side_a) side_a_edges.insert(dart_edge(d));
  std::set<EdgeId> side_b_edges;
  for (Dart d : cut.side_b) side_b_edges.insert(dart_edge(d));
  for (Dart w : cut.complex.face_word(face)) {
    if (side_a_edges.count(dart_edge(w))) return +1;
    if (side_b_edges.count(dart_edge(w))) return -1;
  }
  fail(ErrorKind::InvalidArgument, "face does not touch the cycle");
}

FaceId face_adjacent_to_both(const SurfaceComplex& c, const EdgePath& a, const EdgePath& b) {
  std::set<EdgeId> ea, eb;
  for (Dart d : a) ea.insert(dart_edge(d));
  for (Dart d : b) eb.insert(dart_edge(d));
  for (const auto& [f, word] : c.faces()) {
    bool has_a = false, has_b = false;
    for (Dart d : word) {
      if (ea.count(dart_edge(d))) has_a = true;
      if (eb.count(dart_edge(d))) has_b = true;
    }
    if (has_a && has_b) return f;
  }
  fail(ErrorKind::InvalidArgument, "no face adjacent to both paths");
}

std::pair<SurfaceComplex, FaceId> cap_with_disk(const SurfaceComplex& cin, const EdgePath& circle) {
  SurfaceComplex c = cin;
  auto uses = c.edge_uses();
  for (Dart d : circle) {
    if (uses.at(dart_edge(d)).size() != 1) fail(ErrorKind::InvalidArgument, "cap circle not free");
  }
  if (!path_chains(c, circle, true)) fail(ErrorKind::InvalidArgument, "cap circle does not chain");
  const FaceId f = c.add_face(circle);
  if (strict_validation()) c.validate();
  return {std::move(c), f};
}

}  // namespace seifalt
