#include "doctest.h"

#include <algorithm>

#include "seifalt/alteration.hpp"
#include "seifalt/handle_surgery.hpp"
#include "seifalt/surface_ops.hpp"

using namespace seifalt;

namespace {

SurfaceType ori(int genus, int boundary) { return SurfaceType{true, genus, boundary}; }

std::vector<FaceId> interior_faces(const SurfaceComplex& c) {
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

SurfaceComplex disk_with_interior_faces(int n) {
  SurfaceComplex c = make_disk(4);
  for (int i = 0; i < n; ++i) {
    InscribeResult r = inscribe_circle(c, c.faces().begin()->first);
    c = std::move(r.complex);
  }
  return c;
}

// One-holed torus with a recorded non-separating interior cycle (the tube
// meridian).
struct TorusFixture {
  SurfaceComplex complex;
  EdgePath meridian;
};

TorusFixture one_holed_torus() {
  SurfaceComplex host = disk_with_interior_faces(2);
  auto sites = interior_faces(host);
  OneHandleResult tube = attach_one_handle(host, OneHandle{sites[0], sites[1]});
  return TorusFixture{tube.complex, tube.meridians[0]};
}

// Disk member matching a host cycle.
AlteringSurface disk_member(const EdgePath& host_cycle, int sign = +1) {
  SurfaceComplex d = make_disk(static_cast<int>(host_cycle.size()));
  AlteringSurface f;
  f.surface = d;
  Attachment a;
  a.circle = boundary_circle_label(d.boundary_circles()[0]);
  a.host_cycle = host_cycle;
  a.sign = sign;
  f.attachments.push_back(a);
  return f;
}

// Annulus member along two host cycles.
AlteringSurface annulus_member(const EdgePath& cycle1, int sign1, const EdgePath& cycle2,
                               int sign2) {
  SurfaceComplex an = make_annulus(3);
  auto circles = an.boundary_circles();
  AlteringSurface f;
  f.surface = an;
  Attachment a;
  a.circle = boundary_circle_label(circles[0]);
  a.host_cycle = cycle1;
  a.sign = sign1;
  Attachment b;
  b.circle = boundary_circle_label(circles[1]);
  b.host_cycle = cycle2;
  b.sign = sign2;
  f.attachments = {a, b};
  return f;
}

}  // namespace

TEST_CASE("empty SAS does not change the surface") {
  TorusFixture t = one_holed_torus();
  SurfaceComplex out = alter_sas(t.complex, SAS{});
  CHECK(out.classify() == t.complex.classify());
  YieldResult y = yields(t.complex, SAS{});
  CHECK(y.seifert_part == t.complex.classify());
  CHECK(y.closed_part.empty());
}

TEST_CASE("alteration along a compressing disk is compression") {
  TorusFixture t = one_holed_torus();
  SurfaceComplex altered = alter(t.complex, disk_member(t.meridian));
  CHECK(altered.classify() == std::vector<SurfaceType>{ori(0, 1)});
  // Agreement with the 2-handle surgery route.
  TwoHandleResult surgered = surger_two_handle(t.complex, TwoHandle{t.meridian});
  CHECK(altered.classify() == surgered.complex.classify());
  // chi law.
  CHECK(altered.euler_characteristic() == t.complex.euler_characteristic() + 2);
}

TEST_CASE("disk along a trivial cycle splits off a sphere") {
  SurfaceComplex d = make_disk(4);
  InscribeResult ins = inscribe_circle(d, d.faces().begin()->first);
  SurfaceComplex altered = alter(ins.complex, disk_member(ins.circle));
  std::vector<SurfaceType> expect{ori(0, 0), ori(0, 1)};
  std::sort(expect.begin(), expect.end());
  CHECK(altered.classify() == expect);
  CHECK(altered.euler_characteristic() == ins.complex.euler_characteristic() + 2);
}

TEST_CASE("annulus member keeps chi fixed") {
  // Host: disk with two disjoint trivial interior cycles.  Signs choose the
  // side pairing, the cycle orientation chooses the identification
  // direction; coherent combinations must keep chi.
  SurfaceComplex d = make_disk(4);
  InscribeResult first = inscribe_circle(d, d.faces().begin()->first);
  InscribeResult second = inscribe_circle(first.complex, first.inner_face);
  const EdgePath c1 = first.circle;
  const EdgePath c2 = second.circle;
  SurfaceComplex host = second.complex;
  REQUIRE(paths_vertex_disjoint(host, c1, true, c2, true));

  int coherent = 0;
  for (int s1 : {+1, -1}) {
    for (int s2 : {+1, -1}) {
      for (bool flip2 : {false, true}) {
        AlteringSurface f = annulus_member(c1, s1, flip2 ? reverse_path(c2) : c2, s2);
        try {
          SurfaceComplex altered = alter(host, f);
          CHECK(altered.euler_characteristic() == host.euler_characteristic());
          ++coherent;
        } catch (const TopologyError& err) {
          CHECK(err.kind() == ErrorKind::Incoherent);
        }
      }
    }
  }
  CHECK(coherent >= 2);
}

TEST_CASE("alteration can increase the first Betti number") {
  // Disk host with two side-by-side trivial cycles (the compressed-tube
  // picture).  The annulus joining the pants piece to itself rebuilds the
  // tube: the Seifert part becomes a one-holed torus, Betti 0 -> 2.
  SurfaceComplex d = make_disk(4);
  InscribeResult first = inscribe_circle(d, d.faces().begin()->first);
  // Inscribe the second circle inside a collar quad: side by side with the
  // first, not nested inside it.
  FaceId quad = -1;
  for (const auto& [f, word] : first.complex.faces()) {
    (void)word;
    if (f != first.inner_face) quad = f;
  }
  REQUIRE(quad >= 0);
  InscribeResult second = inscribe_circle(first.complex, quad);
  SurfaceComplex host = second.complex;

  bool witnessed = false;
  for (int s1 : {+1, -1}) {
    for (int s2 : {+1, -1}) {
      for (bool flip2 : {false, true}) {
        SurfaceComplex altered;
        try {
          altered = alter(host, annulus_member(first.circle, s1,
                                               flip2 ? reverse_path(second.circle) : second.circle,
                                               s2));
        } catch (const TopologyError&) {
          continue;  // incoherent combination
        }
        CHECK(altered.euler_characteristic() == host.euler_characteristic());
        for (const auto& t : altered.classify()) {
          if (t.boundary > 0 && first_betti(t) > 0) witnessed = true;
        }
      }
    }
  }
  CHECK(witnessed);
}

TEST_CASE("order independence for disjoint members") {
  // Genus-2 host with two tube meridians; compress both via a 2-member SAS.
  SurfaceComplex host0 = disk_with_interior_faces(2);
  auto sites = interior_faces(host0);
  OneHandleResult t1 = attach_one_handle(host0, OneHandle{sites[0], sites[1]});
  auto sites2 = interior_faces(t1.complex);
  // Avoid tube collar faces overlapping the first meridian: choose faces not
  // meeting it.
  std::vector<FaceId> safe;
  {
    std::set<VertexId> mverts;
    for (VertexId v : path_vertices(t1.complex, t1.meridians[0], true)) mverts.insert(v);
    for (FaceId f : sites2) {
      bool touches = false;
      for (Dart dd : t1.complex.face_word(f)) {
        if (mverts.count(t1.complex.dart_tail(dd)) || mverts.count(t1.complex.dart_head(dd))) {
          touches = true;
        }
      }
      if (!touches) safe.push_back(f);
    }
  }
  REQUIRE(safe.size() >= 2);
  OneHandleResult t2 = attach_one_handle(t1.complex, OneHandle{safe[0], safe[1]});
  SurfaceComplex host = t2.complex;
  REQUIRE(host.classify() == std::vector<SurfaceType>{ori(2, 1)});

  AlteringSurface f1 = disk_member(t1.meridians[0]);
  AlteringSurface f2 = disk_member(t2.meridians[0]);

  SAS both;
  both.members = {f1, f2};
  SurfaceComplex batch = alter_sas(host, both);
  CHECK(batch.classify() == std::vector<SurfaceType>{ori(0, 1)});

  SAS swapped;
  swapped.members = {f2, f1};
  SurfaceComplex batch2 = alter_sas(host, swapped);
  CHECK(batch2.classify() == batch.classify());

  // Sequential single alterations agree as well.
  SurfaceComplex seq1 = alter(alter(host, f1), f2);
  SurfaceComplex seq2 = alter(alter(host, f2), f1);
  CHECK(seq1.classify() == batch.classify());
  CHECK(seq2.classify() == batch.classify());
}

TEST_CASE("yields partitions and preserves host boundary") {
  SurfaceComplex d = make_disk(4);
  InscribeResult ins = inscribe_circle(d, d.faces().begin()->first);
  SAS sas;
  sas.members.push_back(disk_member(ins.circle));
  YieldResult y = yields(ins.complex, sas);
  CHECK(y.seifert_part == std::vector<SurfaceType>{ori(0, 1)});
  CHECK(y.closed_part == std::vector<SurfaceType>{ori(0, 0)});
  int host_boundary = 0;
  for (const auto& t : ins.complex.classify()) host_boundary += t.boundary;
  int part_boundary = 0;
  for (const auto& t : y.seifert_part) part_boundary += t.boundary;
  CHECK(part_boundary == host_boundary);
}

TEST_CASE("yields refuses hosts with closed components") {
  SurfaceComplex sphere = make_sphere(3);
  CHECK_THROWS_AS(yields(sphere, SAS{}), TopologyError);
}

TEST_CASE("overlapping attachments are rejected") {
  TorusFixture t = one_holed_torus();
  SAS sas;
  sas.members.push_back(disk_member(t.meridian));
  sas.members.push_back(disk_member(t.meridian));
  CHECK_THROWS_AS(alter_sas(t.complex, sas), TopologyError);
  try {
    alter_sas(t.complex, sas);
  } catch (const TopologyError& err) {
    CHECK(err.kind() == ErrorKind::AttachmentOverlap);
  }
}

TEST_CASE("attachment on the boundary is rejected") {
  SurfaceComplex d = make_disk(4);
  auto circle = d.boundary_circles()[0];
  AlteringSurface f = disk_member(circle);
  try {
    alter(d, f);
    CHECK(false);
  } catch (const TopologyError& err) {
    const bool boundary_kind = err.kind() == ErrorKind::AttachmentOnBoundary ||
                               err.kind() == ErrorKind::CurveTouchesBoundary;
    CHECK(boundary_kind);
  }
}
