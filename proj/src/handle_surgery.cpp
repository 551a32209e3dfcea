#include "seifalt/handle_surgery.hpp"

#include <string>

namespace seifalt {

namespace {

void check_site(const SurfaceComplex& s, FaceId f) {
  if (!s.has_face(f)) fail(ErrorKind::LabelUnknown, "no such site face " + std::to_string(f));
  auto uses = s.edge_uses();
  for (Dart d : s.face_word(f)) {
    if (uses.at(dart_edge(d)).size() != 2) {
      fail(ErrorKind::SiteOnBoundary, "site face " + std::to_string(f) + " touches a free edge");
    }
  }
}

}  // namespace

OneHandleResult attach_one_handle(const SurfaceComplex& s, const OneHandle& h) {
  if (h.site_a == h.site_b) fail(ErrorKind::InvalidArgument, "1-handle sites must be distinct faces");
  if (h.rings < 1) fail(ErrorKind::InvalidArgument, "1-handle needs >= 1 meridian ring");
  if (!s.is_orientable()) fail(ErrorKind::Incoherent, "host surface is not orientable");
  check_site(s, h.site_a);
  check_site(s, h.site_b);

  const int chi_before = s.euler_characteristic();
  PunchResult pa = punch_hole(s, h.site_a);
  PunchResult pb = punch_hole(pa.complex, h.site_b);
  LadderResult tube = glue_with_ladder(pb.complex, pa.circle, pb.circle, h.rings, h.reversed);

  if (!tube.complex.is_orientable()) {
    fail(ErrorKind::Incoherent, "1-handle orientation datum does not extend");
  }
  if (tube.complex.euler_characteristic() != chi_before - 2) {
    fail(ErrorKind::InvalidComplex, "1-handle chi bookkeeping failed");
  }
  return OneHandleResult{std::move(tube.complex), std::move(tube.rings)};
}

TwoHandleResult surger_two_handle(const SurfaceComplex& s, const TwoHandle& h) {
  if (!s.is_orientable()) fail(ErrorKind::Incoherent, "host surface is not orientable");
  validate_interior_cycle(s, h.cycle);

  const int chi_before = s.euler_characteristic();
  CutResult cut = cut_along_cycle(s, h.cycle);
  auto [with_a, cap_a] = cap_with_disk(cut.complex, cut.side_a);
  auto [with_b, cap_b] = cap_with_disk(with_a, cut.side_b);

  if (!with_b.is_orientable()) fail(ErrorKind::Incoherent, "2-handle result is not orientable");
  if (with_b.euler_characteristic() != chi_before + 2) {
    fail(ErrorKind::InvalidComplex, "2-handle chi bookkeeping failed");
  }
  TwoHandleResult out;
  out.complex = std::move(with_b);
  out.cap_circle_a = cut.side_a;
  out.cap_circle_b = cut.side_b;
  out.cap_a = cap_a;
  out.cap_b = cap_b;
  return out;
}

std::vector<SurfaceComplex> apply_tube_sequence(const SurfaceComplex& start,
                                                const TubeSequence& seq) {
  std::vector<SurfaceComplex> out;
  out.push_back(start);
  for (size_t i = 0; i < seq.moves.size(); ++i) {
    const TubeMove& move = seq.moves[i];
    try {
      if (move.kind == TubeMove::Kind::OneHandle) {
        out.push_back(attach_one_handle(out.back(), move.one).complex);
      } else {
        out.push_back(surger_two_handle(out.back(), move.two).complex);
      }
    } catch (const TopologyError& err) {
      fail(err.kind(), "move " + std::to_string(i) + ": " + err.what());
    }
  }
  return out;
}

}  // namespace seifalt
