#include "seifalt/fixtures.hpp"

#include "seifalt/handle_surgery.hpp"
#include "seifalt/transport.hpp"
#include "seifalt/seifert.hpp"
#include "seifalt/surface_ops.hpp"

namespace seifalt {

namespace {

std::vector<FaceId> faces_clear_of_boundary(const SurfaceComplex& c) {
  auto uses = c.edge_uses();
  std::vector<FaceId> out;
  for (const auto& [f, word] : c.faces()) {
    bool interior = true;
    for (Dart d : word) {
      if (uses.at(dart_edge(d)).size() != 2) interior = false;
    }
    if (interior) out.push_back(f);
  }
  return out;
}

AlteringSurface disk_member(const EdgePath& cycle, int sign) {
  SurfaceComplex d = make_disk(static_cast<int>(cycle.size()));
  d = inscribe_circle(d, d.faces().begin()->first).complex;
  AlteringSurface f;
  Attachment a;
  a.circle = boundary_circle_label(d.boundary_circles()[0]);
  a.host_cycle = cycle;
  a.sign = sign;
  f.surface = std::move(d);
  f.attachments.push_back(a);
  return f;
}

}  // namespace

KobayashiFixture kobayashi_fixture() {
  // Disk with enough interior faces for three tube attachments.
  SurfaceComplex host = make_disk(4);
  for (int i = 0; i < 6; ++i) {
    host = inscribe_circle(host, host.faces().begin()->first).complex;
  }

  std::vector<EdgePath> cocores;
  std::vector<EdgePath> third_tube;  // all five meridians of the third tube
  for (int tube = 0; tube < 3; ++tube) {
    auto sites = faces_clear_of_boundary(host);
    if (sites.size() < 2) fail(ErrorKind::InvalidComplex, "fixture host lacks interior faces");
    const int rings = (tube == 2) ? 5 : 1;
    OneHandleResult r = attach_one_handle(host, OneHandle{sites[0], sites[1], false, rings});
    host = std::move(r.complex);
    cocores.push_back(r.meridians[0]);
    if (tube == 2) third_tube = r.meridians;
  }

  KobayashiFixture out;
  out.host = host;
  for (int tube = 0; tube < 3; ++tube) {
    out.sas.members.push_back(disk_member(cocores[tube], +1));
  }
  // Fourth member: annulus between two parallel meridians of the third
  // tube, plus copy facing the band between them on both sides (the closed
  // torus appears there under alteration).
  const EdgePath& m1 = third_tube[1];
  const EdgePath& mid = third_tube[2];
  const EdgePath& m2 = third_tube[3];
  SurfaceComplex an = make_ladder_annulus(static_cast<int>(m1.size()), 1);
  auto circles = an.boundary_circles();
  AlteringSurface fourth;
  fourth.surface = std::move(an);
  Attachment a1;
  a1.circle = boundary_circle_label(circles[0]);
  a1.host_cycle = m1;
  a1.sign = side_sign(host, m1, face_adjacent_to_both(host, m1, mid));
  Attachment a2;
  a2.circle = boundary_circle_label(circles[1]);
  a2.host_cycle = m2;
  a2.sign = side_sign(host, m2, face_adjacent_to_both(host, m2, mid));
  fourth.attachments = {a1, a2};
  out.sas.members.push_back(std::move(fourth));
  out.sas = resolve_sas_orientations(out.host, out.sas);
  return out;
}

PretzelEx41Fixture pretzel_ex41_fixture() {
  PretzelEx41Fixture out;
  out.pretzel_spec = {1, -5, -5, -1, 5, 5};

  // Inner piece: the genus-1 subpretzel spanned by the four middle twist
  // regions; outer piece: the planar part carrying the link boundary.
  SurfaceComplex inner = pretzel_surface(PretzelSpec{{-5, -5, -1, 5}}).complex;
  SurfaceComplex outer = make_orientable_surface(0, 4);

  auto inner_circles = inner.boundary_circles();
  auto outer_circles = outer.boundary_circles();
  if (inner_circles.size() != 2 || outer_circles.size() != 4) {
    fail(ErrorKind::InvalidComplex, "unexpected fixture piece boundaries");
  }

  DisjointUnionResult u = disjoint_union(outer, inner);
  SurfaceComplex host = std::move(u.complex);
  auto host_circles = host.boundary_circles();

  auto find_circle = [&host](const std::vector<EdgePath>& circles, EdgeId label) -> EdgePath {
    for (const auto& c : circles) {
      for (Dart d : c) {
        if (dart_edge(d) == label) return c;
      }
    }
    fail(ErrorKind::LabelUnknown, "fixture circle lost");
  };

  // Map the inner circles through the union and glue them to two outer
  // circles; the two remaining outer circles are the link boundary.
  std::vector<EdgePath> seams;
  for (int i = 0; i < 2; ++i) {
    const EdgeId inner_label = u.emap.at(boundary_circle_label(inner_circles[i]));
    host_circles = host.boundary_circles();
    const EdgePath inner_c = find_circle(host_circles, inner_label);
    const EdgePath outer_c =
        find_circle(host_circles, boundary_circle_label(outer.boundary_circles()[i]));
    GlueResult g = glue_boundary_circles(host, outer_c, inner_c, false);
    host = std::move(g.complex);
    seams.push_back(g.seam);
  }

  // Annulus member: plus copy toward the outer piece on both seams, so the
  // outer part rejoins into the yielded Seifert surface and the inner genus
  // closes off.
  SurfaceComplex an = make_ladder_annulus(static_cast<int>(seams[0].size()), 1);
  auto an_circles = an.boundary_circles();
  AlteringSurface member;
  member.surface = std::move(an);
  for (int i = 0; i < 2; ++i) {
    // A witness face on the outer side of the seam: outer faces kept their
    // ids through the union.
    FaceId witness = -1;
    std::set<EdgeId> seam_edges;
    for (Dart d : seams[i]) seam_edges.insert(dart_edge(d));
    for (const auto& [f, word] : outer.faces()) {
      (void)word;
      for (Dart d : host.face_word(f)) {
        if (seam_edges.count(dart_edge(d))) witness = f;
      }
      if (witness >= 0) break;
    }
    if (witness < 0) fail(ErrorKind::InvalidComplex, "no outer witness face at the seam");
    Attachment a;
    a.circle = boundary_circle_label(an_circles[i]);
    a.host_cycle = seams[i];
    a.sign = side_sign(host, seams[i], witness);
    member.attachments.push_back(a);
  }
  out.host = std::move(host);
  SAS solo;
  solo.members.push_back(std::move(member));
  solo = resolve_sas_orientations(out.host, solo);
  out.member = std::move(solo.members[0]);
  return out;
}

}  // namespace seifalt
