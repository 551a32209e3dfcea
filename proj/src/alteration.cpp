#include "seifalt/alteration.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace seifalt {

SurfaceComplex mirrored(const SurfaceComplex& c) {
  SurfaceComplex out = c;
  std::vector<FaceId> ids;
  for (const auto& [f, word] : out.faces()) {
    (void)word;
    ids.push_back(f);
  }
  for (FaceId f : ids) {
    out.set_face_word(f, reverse_path(out.face_word(f)));
  }
  return out;
}

void validate_altering_surface(const SurfaceComplex& host, const AlteringSurface& f) {
  f.surface.validate();
  if (f.surface.components().size() != 1) {
    fail(ErrorKind::InvalidArgument, "altering surface must be connected");
  }
  if (!f.surface.is_orientable()) {
    fail(ErrorKind::Incoherent, "altering surface must be orientable");
  }
  auto circles = f.surface.boundary_circles();
  if (circles.empty()) fail(ErrorKind::InvalidArgument, "altering surface needs non-empty boundary");
  std::set<EdgeId> labels;
  for (const auto& circle : circles) labels.insert(boundary_circle_label(circle));
  std::set<EdgeId> attached;
  for (const Attachment& a : f.attachments) {
    if (!labels.count(a.circle)) {
      fail(ErrorKind::LabelUnknown, "attachment references unknown boundary circle " +
                                        std::to_string(a.circle));
    }
    if (!attached.insert(a.circle).second) {
      fail(ErrorKind::InvalidArgument, "boundary circle attached twice");
    }
    if (a.sign != 1 && a.sign != -1) fail(ErrorKind::InvalidArgument, "attachment sign must be +-1");
    try {
      validate_interior_cycle(host, a.host_cycle);
    } catch (const TopologyError& err) {
      if (err.kind() == ErrorKind::CurveTouchesBoundary) {
        fail(ErrorKind::AttachmentOnBoundary, err.what());
      }
      throw;
    }
  }
  if (attached.size() != labels.size()) {
    fail(ErrorKind::InvalidArgument, "every boundary circle of an altering surface must be attached");
  }
  // Attachment cycles of one member are pairwise disjoint.
  for (size_t i = 0; i < f.attachments.size(); ++i) {
    for (size_t j = i + 1; j < f.attachments.size(); ++j) {
      if (!paths_vertex_disjoint(host, f.attachments[i].host_cycle, true,
                                 f.attachments[j].host_cycle, true)) {
        fail(ErrorKind::AttachmentOverlap, "attachment cycles overlap");
      }
    }
  }
}

void validate_sas(const SurfaceComplex& host, const SAS& sas) {
  for (const AlteringSurface& f : sas.members) validate_altering_surface(host, f);
  for (size_t i = 0; i < sas.members.size(); ++i) {
    for (size_t j = i + 1; j < sas.members.size(); ++j) {
      for (const Attachment& a : sas.members[i].attachments) {
        for (const Attachment& b : sas.members[j].attachments) {
          if (!paths_vertex_disjoint(host, a.host_cycle, true, b.host_cycle, true)) {
            fail(ErrorKind::AttachmentOverlap, "attachment cycles of members " + std::to_string(i) +
                                                   " and " + std::to_string(j) + " overlap");
          }
        }
      }
    }
  }
}

SurfaceComplex alter(const SurfaceComplex& host, const AlteringSurface& f) {
  SAS sas;
  sas.members.push_back(f);
  return alter_sas(host, sas);
}

SurfaceComplex alter_sas(const SurfaceComplex& host, const SAS& sas) {
  host.validate();
  if (!host.is_orientable()) fail(ErrorKind::Incoherent, "host surface is not orientable");
  validate_sas(host, sas);

  // Cut along every attachment cycle of every member.  Disjointness keeps
  // recorded cycles of pending cuts valid while earlier cuts happen.
  SurfaceComplex work = host;
  struct CutSides {
    EdgePath left;
    EdgePath right;
  };
  std::vector<std::vector<CutSides>> sides(sas.members.size());
  for (size_t m = 0; m < sas.members.size(); ++m) {
    for (const Attachment& a : sas.members[m].attachments) {
      CutResult cut = cut_along_cycle(work, a.host_cycle);
      work = std::move(cut.complex);
      sides[m].push_back(CutSides{cut.side_a, cut.side_b});
    }
  }

  for (size_t m = 0; m < sas.members.size(); ++m) {
    const AlteringSurface& member = sas.members[m];
    // Plus copy and mirrored minus copy.
    DisjointUnionResult plus = disjoint_union(work, member.surface);
    work = std::move(plus.complex);
    DisjointUnionResult minus = disjoint_union(work, mirrored(member.surface));
    work = std::move(minus.complex);

    // Boundary circles of the member, traced on the original surface then
    // mapped into the union.
    auto member_circles = member.surface.boundary_circles();
    auto map_path = [](const EdgePath& p, const std::map<EdgeId, EdgeId>& emap) {
      EdgePath out;
      for (Dart d : p) out.push_back(make_dart(emap.at(dart_edge(d)), dart_reversed(d)));
      return out;
    };

    for (size_t ai = 0; ai < member.attachments.size(); ++ai) {
      const Attachment& a = member.attachments[ai];
      EdgePath circle_on_f;
      for (const auto& circle : member_circles) {
        if (boundary_circle_label(circle) == a.circle) circle_on_f = circle;
      }
      const EdgePath plus_circle = map_path(circle_on_f, plus.emap);
      const EdgePath minus_circle = map_path(circle_on_f, minus.emap);
      const EdgePath& host_plus = (a.sign > 0) ? sides[m][ai].left : sides[m][ai].right;
      const EdgePath& host_minus = (a.sign > 0) ? sides[m][ai].right : sides[m][ai].left;
      GlueResult g1 = glue_boundary_circles(work, host_plus, plus_circle, false);
      work = std::move(g1.complex);
      GlueResult g2 = glue_boundary_circles(work, host_minus, minus_circle, false);
      work = std::move(g2.complex);
    }
  }

  if (!work.is_orientable()) {
    fail(ErrorKind::Incoherent, "orientation does not extend over the altered surface");
  }
  if (strict_validation()) work.validate();
  return work;
}

YieldResult yields(const SurfaceComplex& host, const SAS& sas) {
  for (const auto& comp : host.classify()) {
    if (comp.boundary == 0) {
      fail(ErrorKind::InvalidArgument, "host has a closed component; not a Seifert surface model");
    }
  }
  SurfaceComplex altered = alter_sas(host, sas);
  YieldResult out;
  for (const auto& cc : altered.classify_components()) {
    if (cc.type.boundary > 0) {
      out.seifert_part.push_back(cc.type);
    } else {
      out.closed_part.push_back(cc.type);
    }
  }
  std::sort(out.seifert_part.begin(), out.seifert_part.end());
  std::sort(out.closed_part.begin(), out.closed_part.end());
  return out;
}

bool same_type_multiset(const std::vector<SurfaceType>& a, const std::vector<SurfaceType>& b) {
  std::vector<SurfaceType> x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace seifalt
