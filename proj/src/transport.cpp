#include "seifalt/transport.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

namespace seifalt {

namespace {

// ---------------------------------------------------------------------------
// Abstract A/B inventory
// ---------------------------------------------------------------------------

struct MarkInfo {
  bool is_chord_end = false;
  int chord = -1;    // chord index when is_chord_end
  bool first = false;  // the chord's end_a
};

std::vector<MarkInfo> layout_marks(const ChordCircleConfig& cfg) {
  const int P = static_cast<int>(cfg.boundary_points.size()) + 2 * static_cast<int>(cfg.chords.size());
  std::vector<MarkInfo> marks(P);
  std::vector<bool> taken(P, false);
  auto claim = [&](int pos) {
    if (pos < 0 || pos >= P) fail(ErrorKind::ConfigInvalid, "mark position out of range");
    if (taken[pos]) fail(ErrorKind::ConfigInvalid, "duplicate mark position");
    taken[pos] = true;
  };
  for (const auto& bp : cfg.boundary_points) {
    claim(bp.position);
    marks[bp.position] = MarkInfo{false, -1, false};
  }
  for (size_t ci = 0; ci < cfg.chords.size(); ++ci) {
    const ChordSpec& ch = cfg.chords[ci];
    if (ch.end_a == ch.end_b) fail(ErrorKind::ConfigInvalid, "chord with equal endpoints");
    claim(ch.end_a);
    marks[ch.end_a] = MarkInfo{true, static_cast<int>(ci), true};
    claim(ch.end_b);
    marks[ch.end_b] = MarkInfo{true, static_cast<int>(ci), false};
  }
  // Non-crossing: chord intervals pairwise nested or disjoint.
  for (size_t i = 0; i < cfg.chords.size(); ++i) {
    const auto [a1, b1] = std::minmax(cfg.chords[i].end_a, cfg.chords[i].end_b);
    for (size_t j = i + 1; j < cfg.chords.size(); ++j) {
      const auto [a2, b2] = std::minmax(cfg.chords[j].end_a, cfg.chords[j].end_b);
      const bool inside = (a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2);
      const bool disjoint = (b1 < a2) || (b2 < a1);
      if (!inside && !disjoint) fail(ErrorKind::ConfigInvalid, "chords cross");
    }
  }
  // Circle nesting forest sanity.
  for (size_t w = 0; w < cfg.circles.size(); ++w) {
    int p = cfg.circles[w].parent;
    int hops = 0;
    while (p >= 0) {
      if (p >= static_cast<int>(cfg.circles.size())) fail(ErrorKind::ConfigInvalid, "circle parent out of range");
      if (++hops > static_cast<int>(cfg.circles.size())) fail(ErrorKind::ConfigInvalid, "circle nesting cycle");
      p = cfg.circles[p].parent;
    }
  }
  return marks;
}

}  // namespace

PieceInventory chord_circle_inventory(const ChordCircleConfig& cfg) {
  const std::vector<MarkInfo> marks = layout_marks(cfg);
  const int P = static_cast<int>(marks.size());
  PieceInventory inv;
  inv.annuli_c = 2 * static_cast<int>(cfg.circles.size());
  if (P == 0) {
    inv.annuli_a = 1;
    inv.bands_b = 0;
    return inv;
  }
  // Pieces: strips 0..P-1 (strip i runs from mark i's after-line to mark
  // i+1's before-line), then wall sheets (chord, +1), (chord, -1).
  const int strips = P;
  const int pieces = strips + 2 * static_cast<int>(cfg.chords.size());
  std::vector<int> parent(pieces);
  for (int i = 0; i < pieces; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto sheet_piece = [&](int chord, int side) { return strips + 2 * chord + (side > 0 ? 0 : 1); };
  // Lines at a chord-end mark connect the adjacent strip to a wall sheet.
  // With the ascending-collar normalization the chord's first endpoint has
  // its -1 line before and +1 line after; the second endpoint is reversed.
  std::vector<bool> touches_bp(pieces, false);
  for (int m = 0; m < P; ++m) {
    const int strip_before = (m + P - 1) % P;  // strip ending at mark m
    const int strip_after = m;                 // strip starting at mark m
    if (!marks[m].is_chord_end) {
      touches_bp[strip_before] = true;
      touches_bp[strip_after] = true;
      continue;
    }
    const int ch = marks[m].chord;
    if (marks[m].first) {
      unite(strip_before, sheet_piece(ch, -1));  // before-line is -1
      unite(strip_after, sheet_piece(ch, +1));   // after-line is +1
    } else {
      unite(strip_before, sheet_piece(ch, +1));
      unite(strip_after, sheet_piece(ch, -1));
    }
  }
  std::map<int, bool> comp_is_band;
  for (int i = 0; i < pieces; ++i) comp_is_band[find(i)] = false;
  for (int i = 0; i < pieces; ++i) {
    if (touches_bp[i]) comp_is_band[find(i)] = true;
  }
  for (const auto& [root, band] : comp_is_band) {
    (void)root;
    if (band) {
      ++inv.bands_b;
    } else {
      ++inv.annuli_a;
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Orientation resolution
// ---------------------------------------------------------------------------

SAS resolve_sas_orientations(const SurfaceComplex& host, const SAS& sas,
                             const std::vector<int>& only) {
  // Cut sides are anchored to the minimal cycle edge, so reversing a cycle
  // path keeps the side assignment and only reflects the identification --
  // exactly the freedom coherence may need, with yield types unchanged.
  const std::set<int> wanted(only.begin(), only.end());
  SAS out;
  for (size_t mi = 0; mi < sas.members.size(); ++mi) {
    const AlteringSurface& member = sas.members[mi];
    if (!wanted.empty() && !wanted.count(static_cast<int>(mi))) {
      out.members.push_back(member);
      continue;
    }
    const int n = static_cast<int>(member.attachments.size());
    const int masks = n <= 8 ? (1 << n) : 256;
    bool done = false;
    for (int mask = 0; mask < masks && !done; ++mask) {
      AlteringSurface candidate = member;
      for (int i = 0; i < n; ++i) {
        if (mask & (1 << i)) {
          candidate.attachments[i].host_cycle = reverse_path(candidate.attachments[i].host_cycle);
        }
      }
      try {
        SAS solo;
        solo.members.push_back(candidate);
        (void)alter_sas(host, solo);
        out.members.push_back(std::move(candidate));
        done = true;
      } catch (const TopologyError& err) {
        if (err.kind() != ErrorKind::Incoherent) throw;
      }
    }
    if (!done) fail(ErrorKind::Incoherent, "no coherent orientation for a transported member");
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1-handle transport
// ---------------------------------------------------------------------------

namespace {

void check_member_face_interior(const SurfaceComplex& surface, FaceId f) {
  if (!surface.has_face(f)) fail(ErrorKind::IntersectionMismatch, "pierced face does not exist");
  auto uses = surface.edge_uses();
  for (Dart d : surface.face_word(f)) {
    if (uses.at(dart_edge(d)).size() != 2) {
      fail(ErrorKind::IntersectionMismatch, "pierced face touches the member boundary");
    }
  }
}

TransportReport base_report(const SurfaceComplex& host, const SAS& sas, const char* kind,
                            const std::vector<SurfaceType>* hint) {
  TransportReport rep;
  rep.move_kind = kind;
  rep.input_members = static_cast<int>(sas.members.size());
  rep.seifert_before = hint ? *hint : yields(host, sas).seifert_part;
  return rep;
}

void finish_report(TransportReport& rep, const SurfaceComplex& surface, const SAS& sas) {
  rep.output_members = static_cast<int>(sas.members.size());
  rep.seifert_after = yields(surface, sas).seifert_part;
  rep.yields_equal = same_type_multiset(rep.seifert_before, rep.seifert_after);
}

}  // namespace

TransportStep transport_one_handle(const SurfaceComplex& host, const SAS& sas,
                                   const OneHandle& move, const OneHandleIntersections& ix,
                                   const std::vector<SurfaceType>* seifert_before_hint) {
  validate_sas(host, sas);
  const int k = static_cast<int>(ix.punctures.size());
  int last_rank = INT32_MIN;
  std::set<std::pair<int, FaceId>> seen;
  for (const HandlePuncture& p : ix.punctures) {
    if (p.member < 0 || p.member >= static_cast<int>(sas.members.size())) {
      fail(ErrorKind::IntersectionMismatch, "puncture references unknown member");
    }
    if (p.rank <= last_rank) fail(ErrorKind::IntersectionMismatch, "puncture ranks must strictly increase");
    last_rank = p.rank;
    if (!seen.insert({p.member, p.face}).second) {
      fail(ErrorKind::IntersectionMismatch, "pierced faces must be pairwise distinct");
    }
    check_member_face_interior(sas.members[p.member].surface, p.face);
  }

  // Site faces must stay clear of the carried attachment cycles: punching a
  // face swaps its id for fresh collar ids, which would silently re-anchor
  // the side convention of any cycle it touches.
  for (const AlteringSurface& member : sas.members) {
    for (const Attachment& a : member.attachments) {
      std::set<EdgeId> cyc;
      for (Dart d : a.host_cycle) cyc.insert(dart_edge(d));
      for (FaceId site : {move.site_a, move.site_b}) {
        if (!host.has_face(site)) continue;
        for (Dart d : host.face_word(site)) {
          if (cyc.count(dart_edge(d))) {
            fail(ErrorKind::IntersectionMismatch, "1-handle site touches an attachment cycle");
          }
        }
      }
    }
  }

  TransportReport rep = base_report(host, sas, "1-handle", seifert_before_hint);

  OneHandle real = move;
  real.rings = std::max(move.rings, 2 * k + 1);
  OneHandleResult tube = [&] {
    try {
      return attach_one_handle(host, real);
    } catch (const TopologyError& err) {
      if (err.kind() == ErrorKind::Incoherent) fail(ErrorKind::IncoherentMove, err.what());
      throw;
    }
  }();

  SAS out;
  std::vector<int> touched;
  for (size_t mi = 0; mi < sas.members.size(); ++mi) {
    AlteringSurface f = sas.members[mi];
    bool pierced = false;
    for (int g = 0; g < k; ++g) {
      if (ix.punctures[g].member != static_cast<int>(mi)) continue;
      PunchResult punch = punch_hole(f.surface, ix.punctures[g].face);
      f.surface = std::move(punch.complex);
      Attachment a;
      a.circle = boundary_circle_label(punch.circle);
      a.host_cycle = tube.meridians[2 * g + 1];
      a.sign = +1;
      f.attachments.push_back(a);
      pierced = true;
    }
    if (pierced) touched.push_back(static_cast<int>(out.members.size()));
    out.members.push_back(std::move(f));
  }
  for (int u = 0; u <= k; ++u) {
    const EdgePath& ring = tube.meridians[2 * u];
    SurfaceComplex disk = make_disk(static_cast<int>(ring.size()));
    disk = inscribe_circle(disk, disk.faces().begin()->first).complex;
    AlteringSurface d;
    Attachment a;
    a.circle = boundary_circle_label(disk.boundary_circles()[0]);
    a.host_cycle = ring;
    a.sign = +1;
    d.surface = std::move(disk);
    d.attachments.push_back(a);
    touched.push_back(static_cast<int>(out.members.size()));
    out.members.push_back(std::move(d));
  }

  out = resolve_sas_orientations(tube.complex, out, touched);
  rep.inventory.midpoint_disks = k + 1;
  finish_report(rep, tube.complex, out);

  TransportStep step;
  step.surface = std::move(tube.complex);
  step.sas = std::move(out);
  step.report = std::move(rep);
  return step;
}

// ---------------------------------------------------------------------------
// 2-handle transport
// ---------------------------------------------------------------------------

namespace {

// Five parallel push-in copies per trace circle, outermost (collar -1) to
// innermost (+1); index 2 is the central copy.  inward_sign[level] is the
// attachment sign putting the plus copy on the side toward the circle core.
struct CapCircleFamily {
  std::array<EdgePath, 5> rings;
  std::array<int, 5> inward_sign{};
};

struct CapBuild {
  std::vector<CapCircleFamily> families;  // indexed like cfg.circles
  // Sign putting the plus copy on the cap side of the cap boundary circle.
  int cap_side_sign = +1;
  // Surviving face inside the cap region, adjacent to the cap circle.
  FaceId region_witness = -1;
};

// Builds the cap structure over one capped side: nested push-in circles for
// every trace circle, honoring the nesting forest.  Chord arcs are added by
// the crossing machinery.
CapBuild build_cap_circles(SurfaceComplex& work, FaceId cap_face, const ChordCircleConfig& cfg) {
  CapBuild out;
  out.families.resize(cfg.circles.size());
  // region_face[i]: a surviving face inside circle i's innermost disk;
  // key -1 is the cap region itself.
  std::map<int, FaceId> region_face;
  region_face[-1] = cap_face;
  // Process parents before children.
  std::vector<int> order;
  std::vector<bool> placed(cfg.circles.size(), false);
  for (size_t pass = 0; pass <= cfg.circles.size(); ++pass) {
    for (size_t w = 0; w < cfg.circles.size(); ++w) {
      if (placed[w]) continue;
      const int parent = cfg.circles[w].parent;
      if (parent == -1 || placed[parent]) {
        order.push_back(static_cast<int>(w));
        placed[w] = true;
      }
    }
  }
  if (order.size() != cfg.circles.size()) fail(ErrorKind::ConfigInvalid, "circle nesting unresolved");

  for (int w : order) {
    const int parent = cfg.circles[w].parent;
    FaceId where = region_face.at(parent);
    CapCircleFamily fam;
    FaceId inner = where;
    for (int level = 0; level < 5; ++level) {
      InscribeResult ins = inscribe_circle(work, inner);
      work = std::move(ins.complex);
      fam.rings[level] = ins.circle;
      if (level == 0) {
        // Collar quad 0 inherits the region word start, keeping a surviving
        // witness face for the parent region (used by siblings).
        region_face[parent] = ins.collar.front();
      }
      inner = ins.inner_face;
    }
    region_face[w] = inner;
    out.families[static_cast<int>(w)] = std::move(fam);
  }
  // Inward signs: levels 0..3 via the collar band to the next level, level 4
  // via the innermost region face (computed before children would subdivide
  // it is unnecessary: region_face[w] always survives inside ring 4).
  for (size_t w = 0; w < cfg.circles.size(); ++w) {
    CapCircleFamily& fam = out.families[w];
    for (int level = 0; level < 4; ++level) {
      const FaceId band = face_adjacent_to_both(work, fam.rings[level], fam.rings[level + 1]);
      fam.inward_sign[level] = side_sign(work, fam.rings[level], band);
    }
    fam.inward_sign[4] = side_sign(work, fam.rings[4], region_face.at(static_cast<int>(w)));
  }
  out.region_witness = region_face.at(-1);
  return out;
}

// Splits a member into its connected components, distributing attachments.
std::vector<AlteringSurface> split_member_components(const AlteringSurface& member) {
  auto comps = member.surface.components();
  if (comps.size() == 1) return {member};
  std::vector<AlteringSurface> out;
  for (const auto& comp : comps) {
    AlteringSurface piece;
    piece.surface = member.surface.restricted_to(comp);
    for (const Attachment& a : member.attachments) {
      if (comp.edges.count(a.circle)) piece.attachments.push_back(a);
    }
    out.push_back(std::move(piece));
  }
  return out;
}

struct RailSet {
  std::array<EdgePath, 3> rings;  // ordered side_a to side_b
  EdgePath outer_a;               // the side_a copy of the original cycle
  EdgePath outer_b;
};

// One transverse crossing of a member attachment cycle with the move cycle.
struct MarkEvent {
  int member = -1;
  int attachment = -1;
  int gamma_pos = -1;  // index along the attachment cycle
  bool from_plus = false;  // c enters from the member's +s side
  int anchor = -1;         // index of the first column vertex along c
  // Column vertices by s-level 0..4 (s = -1,-1/2,0,+1/2,+1), before the cut.
  std::array<VertexId, 5> col{};
};

struct TwoHandleContext {
  SurfaceComplex surface;  // T_{j+1}
  EdgePath cap_circle_a;   // == the rerouted move cycle's two copies
  EdgePath cap_circle_b;
  CapBuild cap_a;
  CapBuild cap_b;
  FaceId cap_threshold = -1;  // faces >= this id are cap material
  // Per (member, attachment index): three parallel rails replacing the
  // original attachment cycle.
  std::map<std::pair<int, int>, RailSet> rails;
  std::set<int> meeting;  // member indices owning marks or circles
  std::vector<MarkEvent> events;          // in c order == cfg positions
  std::map<VertexId, std::pair<VertexId, VertexId>> vertex_sides;  // move-cut splits
  // chord_arcs[side 0=a,1=b][chord][level in {0,1,3,4}] -> arc path from the
  // chord's first end to its second end, inside the cap.
  std::map<std::tuple<int, int, int>, EdgePath> chord_arcs;
};

// Splits a face along a fresh path between two vertices on its word.
EdgePath split_face_with_arc(SurfaceComplex& c, FaceId face, VertexId u, VertexId w,
                             int segments) {
  const std::vector<Dart> word = c.face_word(face);
  int iu = -1, iw = -1;
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    const VertexId v = c.dart_tail(word[i]);
    if (v == u && iu < 0) iu = i;
    if (v == w && iw < 0) iw = i;
  }
  if (iu < 0 || iw < 0 || iu == iw) fail(ErrorKind::ConfigInvalid, "arc endpoints not on the face");
  EdgePath path;
  VertexId at = u;
  for (int s = 0; s < segments; ++s) {
    const VertexId next = (s + 1 == segments) ? w : c.add_vertex();
    path.push_back(make_dart(c.add_edge(at, next), false));
    at = next;
  }
  std::vector<Dart> seg_a, seg_b;
  for (int i = iu; i != iw; i = (i + 1) % static_cast<int>(word.size())) seg_a.push_back(word[i]);
  for (int i = iw; i != iu; i = (i + 1) % static_cast<int>(word.size())) seg_b.push_back(word[i]);
  c.remove_face(face);
  EdgePath back = reverse_path(path);
  std::vector<Dart> w1 = seg_a;
  w1.insert(w1.end(), back.begin(), back.end());
  std::vector<Dart> w2 = seg_b;
  w2.insert(w2.end(), path.begin(), path.end());
  c.add_face(w1);
  c.add_face(w2);
  return path;
}

// Finds the face at or above the given id threshold whose word contains the
// vertex/edge probes (cap-region face lookup after subdivisions).
FaceId cap_face_containing(const SurfaceComplex& c, FaceId threshold, VertexId u, VertexId w) {
  for (const auto& [f, word] : c.faces()) {
    if (f < threshold) continue;
    bool has_u = false, has_w = false;
    for (Dart d : word) {
      if (c.dart_tail(d) == u) has_u = true;
      if (c.dart_tail(d) == w) has_w = true;
    }
    if (has_u && has_w) return f;
  }
  fail(ErrorKind::ConfigInvalid, "no cap face contains both arc endpoints");
}

FaceId cap_face_of_edge(const SurfaceComplex& c, FaceId threshold, EdgeId e) {
  FaceId best = -1;
  for (const auto& [f, word] : c.faces()) {
    for (Dart d : word) {
      if (dart_edge(d) == e && f >= threshold) best = std::max(best, f);
    }
  }
  if (best < 0) fail(ErrorKind::ConfigInvalid, "no cap face borders the edge");
  return best;
}

TwoHandleContext prepare_two_handle(const SurfaceComplex& host, const SAS& sas,
                                    const TwoHandle& move, const ChordCircleConfig& cfg) {
  validate_sas(host, sas);
  validate_interior_cycle(host, move.cycle);
  TwoHandleContext ctx;
  for (const CircleSpec& spec : cfg.circles) {
    if (spec.member < 0 || spec.member >= static_cast<int>(sas.members.size())) {
      fail(ErrorKind::IntersectionMismatch, "circle payload references unknown member");
    }
    ctx.meeting.insert(spec.member);
    validate_interior_cycle(sas.members[spec.member].surface, spec.trace);
  }
  for (const BoundaryPointSpec& bp : cfg.boundary_points) {
    if (bp.member < 0 || bp.member >= static_cast<int>(sas.members.size())) {
      fail(ErrorKind::IntersectionMismatch, "boundary point references unknown member");
    }
    ctx.meeting.insert(bp.member);
  }
  for (const ChordSpec& ch : cfg.chords) {
    if (ch.member < 0 || ch.member >= static_cast<int>(sas.members.size())) {
      fail(ErrorKind::IntersectionMismatch, "chord references unknown member");
    }
    ctx.meeting.insert(ch.member);
    validate_proper_arc(sas.members[ch.member].surface, ch.trace);
  }
  // Traces on one member must be pairwise disjoint (circles and chord arcs).
  for (size_t i = 0; i < cfg.circles.size(); ++i) {
    for (size_t j = i + 1; j < cfg.circles.size(); ++j) {
      if (cfg.circles[i].member != cfg.circles[j].member) continue;
      const auto& mem = sas.members[cfg.circles[i].member].surface;
      if (!paths_vertex_disjoint(mem, cfg.circles[i].trace, true, cfg.circles[j].trace, true)) {
        fail(ErrorKind::ConfigInvalid, "trace circles overlap on a member");
      }
    }
    for (const ChordSpec& ch : cfg.chords) {
      if (ch.member != cfg.circles[i].member) continue;
      const auto& mem = sas.members[ch.member].surface;
      if (!paths_vertex_disjoint(mem, cfg.circles[i].trace, true, ch.trace, false)) {
        fail(ErrorKind::ConfigInvalid, "trace circle meets a chord trace");
      }
    }
  }
  for (size_t i = 0; i < cfg.chords.size(); ++i) {
    for (size_t j = i + 1; j < cfg.chords.size(); ++j) {
      if (cfg.chords[i].member != cfg.chords[j].member) continue;
      const auto& mem = sas.members[cfg.chords[i].member].surface;
      if (!paths_vertex_disjoint(mem, cfg.chords[i].trace, false, cfg.chords[j].trace, false)) {
        fail(ErrorKind::ConfigInvalid, "chord traces overlap on a member");
      }
    }
  }
  // Members without marks may not cross the move cycle.
  std::set<int> mark_owner;
  for (const BoundaryPointSpec& bp : cfg.boundary_points) mark_owner.insert(bp.member);
  for (const ChordSpec& ch : cfg.chords) mark_owner.insert(ch.member);
  for (size_t mi = 0; mi < sas.members.size(); ++mi) {
    if (mark_owner.count(static_cast<int>(mi))) continue;
    for (const Attachment& a : sas.members[mi].attachments) {
      if (!paths_vertex_disjoint(host, a.host_cycle, true, move.cycle, true)) {
        fail(ErrorKind::IntersectionMismatch,
             "attachment cycle crosses the 2-handle cycle but no mark declares it");
      }
    }
  }

  // Thicken every attachment circle of every meeting member into three
  // parallel rails, rerouting the move cycle through the collars.
  SurfaceComplex work = host;
  EdgePath c_cur = move.cycle;
  struct CircleCrossings {
    int mi, ai;
    std::vector<int> positions;
    std::vector<EdgePath> rungs;
  };
  std::vector<CircleCrossings> crossings;
  for (int mi : ctx.meeting) {
    const AlteringSurface& member = sas.members[mi];
    for (size_t ai = 0; ai < member.attachments.size(); ++ai) {
      ThickenResult th =
          thicken_cycle(work, member.attachments[ai].host_cycle, 3, {c_cur}, {true});
      work = std::move(th.complex);
      c_cur = th.rerouted[0];
      RailSet rs;
      rs.rings = {th.rings[0], th.rings[1], th.rings[2]};
      rs.outer_a = th.ring_a;
      rs.outer_b = th.ring_b;
      ctx.rails[{mi, static_cast<int>(ai)}] = std::move(rs);
      if (!th.crossings[0].empty()) {
        CircleCrossings cc;
        cc.mi = mi;
        cc.ai = static_cast<int>(ai);
        cc.positions = th.crossings[0];
        for (int p : th.crossings[0]) cc.rungs.push_back(th.rungs[p]);
        crossings.push_back(std::move(cc));
      }
    }
  }

  // Locate every crossing's rung inside the final rerouted cycle and build
  // the ordered event list.
  std::map<EdgeId, int> c_index_of_edge;
  for (int i = 0; i < static_cast<int>(c_cur.size()); ++i) c_index_of_edge[dart_edge(c_cur[i])] = i;
  for (const CircleCrossings& cc : crossings) {
    const bool plus_is_side_a = sas.members[cc.mi].attachments[cc.ai].sign > 0;
    for (size_t t = 0; t < cc.positions.size(); ++t) {
      const EdgePath& rung = cc.rungs[t];  // side_a layer to side_b layer
      auto it = c_index_of_edge.find(dart_edge(rung.front()));
      if (it == c_index_of_edge.end()) {
        fail(ErrorKind::IntersectionMismatch, "crossing rung lost from the rerouted cycle");
      }
      const int idx = it->second;
      const bool forward = !dart_reversed(c_cur[idx]) == !dart_reversed(rung.front());
      MarkEvent ev;
      ev.member = cc.mi;
      ev.attachment = cc.ai;
      ev.gamma_pos = cc.positions[t];
      // Column vertices along the rung, side_a first.
      std::vector<VertexId> rung_verts = path_vertices(work, rung, false);
      for (int level = 0; level < 5; ++level) {
        ev.col[level] = plus_is_side_a ? rung_verts[4 - level] : rung_verts[level];
      }
      // c enters from the member's +s side when it traverses the rung from
      // the side that carries s=+1.
      ev.from_plus = (forward == plus_is_side_a);
      // Anchor: the first of the four rung edges in c order.
      if (forward) {
        ev.anchor = idx;
      } else {
        auto it_last = c_index_of_edge.find(dart_edge(rung.back()));
        if (it_last == c_index_of_edge.end()) {
          fail(ErrorKind::IntersectionMismatch, "crossing rung lost from the rerouted cycle");
        }
        ev.anchor = it_last->second;
      }
      ctx.events.push_back(ev);
    }
  }
  std::sort(ctx.events.begin(), ctx.events.end(),
            [](const MarkEvent& a, const MarkEvent& b) { return a.anchor < b.anchor; });

  // The canonical event order must match the payload's cyclic positions.
  const int P = static_cast<int>(cfg.boundary_points.size()) + 2 * static_cast<int>(cfg.chords.size());
  if (static_cast<int>(ctx.events.size()) != P) {
    fail(ErrorKind::IntersectionMismatch,
         "payload marks do not match the actual crossings (" +
             std::to_string(ctx.events.size()) + " crossings, " + std::to_string(P) + " marks)");
  }
  const std::vector<MarkInfo> marks = layout_marks(cfg);
  for (int i = 0; i < P; ++i) {
    const MarkInfo& mark = marks[i];
    const int owner = mark.is_chord_end ? cfg.chords[mark.chord].member
                                        : [&] {
                                            for (const auto& bp : cfg.boundary_points) {
                                              if (bp.position == i) return bp.member;
                                            }
                                            return -1;
                                          }();
    if (owner != ctx.events[i].member) {
      fail(ErrorKind::IntersectionMismatch, "mark " + std::to_string(i) + " owner mismatch");
    }
  }
  // Chord ends: opposite passage directions and aligned trace endpoints.
  for (const ChordSpec& ch : cfg.chords) {
    const MarkEvent& e1 = ctx.events[ch.end_a];
    const MarkEvent& e2 = ctx.events[ch.end_b];
    if (e1.from_plus == e2.from_plus) {
      fail(ErrorKind::ConfigInvalid, "chord ends must cross the handle from opposite collar sides");
    }
    const SurfaceComplex& mem = sas.members[ch.member].surface;
    const VertexId t0 = mem.dart_tail(ch.trace.front());
    const VertexId t1 = mem.dart_head(ch.trace.back());
    // Aligned boundary vertices of the two events.
    auto aligned_vertex = [&](const MarkEvent& ev) -> VertexId {
      const Attachment& att = sas.members[ev.member].attachments[ev.attachment];
      for (const EdgePath& circle : mem.boundary_circles()) {
        if (boundary_circle_label(circle) != att.circle) continue;
        if (circle.size() != att.host_cycle.size()) {
          fail(ErrorKind::IntersectionMismatch,
               "crossing circle must match its host cycle length for alignment");
        }
        return mem.dart_tail(circle[ev.gamma_pos % circle.size()]);
      }
      fail(ErrorKind::IntersectionMismatch, "aligned circle not found");
    };
    const VertexId v1 = aligned_vertex(e1);
    const VertexId v2 = aligned_vertex(e2);
    if (!((t0 == v1 && t1 == v2) || (t0 == v2 && t1 == v1))) {
      fail(ErrorKind::IntersectionMismatch, "chord trace endpoints do not match its crossings");
    }
  }
  // Boundary-point seams subdivide the two circle edges around their
  // crossing vertex, so two seam-carrying crossings may not sit on adjacent
  // positions of one circle.
  {
    std::set<int> bp_positions;
    for (const auto& bp : cfg.boundary_points) bp_positions.insert(bp.position);
    std::map<std::pair<int, int>, std::vector<std::pair<int, bool>>> per_circle;
    for (int i = 0; i < static_cast<int>(ctx.events.size()); ++i) {
      const MarkEvent& ev = ctx.events[i];
      per_circle[{ev.member, ev.attachment}].push_back({ev.gamma_pos, bp_positions.count(i) > 0});
    }
    for (auto& [key, list] : per_circle) {
      const int len =
          static_cast<int>(sas.members[key.first].attachments[key.second].host_cycle.size());
      if (len < 3) fail(ErrorKind::ConfigInvalid, "crossing circle too short");
      std::sort(list.begin(), list.end());
      for (size_t i = 0; i < list.size(); ++i) {
        const auto& cur = list[i];
        const auto& nxt = list[(i + 1) % list.size()];
        const int gap = ((nxt.first - cur.first) % len + len) % len;
        if (list.size() > 1 && gap == 0) {
          fail(ErrorKind::ConfigInvalid, "two crossings at one circle position");
        }
        if (list.size() > 1 && gap == 1 && cur.second && nxt.second) {
          fail(ErrorKind::ConfigInvalid, "adjacent seam crossings on an attachment cycle");
        }
      }
    }
  }

  // Cut along the rerouted move cycle and cap both sides.
  CutResult cut = cut_along_cycle(work, c_cur);
  work = std::move(cut.complex);
  ctx.vertex_sides = cut.vertex_sides;
  auto [with_a, cap_face_a] = cap_with_disk(work, cut.side_a);
  work = std::move(with_a);
  auto [with_b, cap_face_b] = cap_with_disk(work, cut.side_b);
  work = std::move(with_b);
  ctx.cap_threshold = cap_face_a;

  // Chord push-in arcs at the four collar levels, in both caps.  Insert
  // outermost pairs first so every next arc finds its face.
  std::vector<int> chord_order(cfg.chords.size());
  for (size_t i = 0; i < cfg.chords.size(); ++i) chord_order[i] = static_cast<int>(i);
  std::sort(chord_order.begin(), chord_order.end(), [&](int x, int y) {
    const auto [ax, bx] = std::minmax(cfg.chords[x].end_a, cfg.chords[x].end_b);
    const auto [ay, by] = std::minmax(cfg.chords[y].end_a, cfg.chords[y].end_b);
    return std::tuple(ax, -bx) < std::tuple(ay, -by);
  });
  for (int ci : chord_order) {
    const ChordSpec& ch = cfg.chords[ci];
    const MarkEvent& e1 = ctx.events[ch.end_a];
    const MarkEvent& e2 = ctx.events[ch.end_b];
    // Insertion order: ascending offset at e1 (outermost corridor first).
    std::vector<int> levels = {0, 1, 3, 4};
    std::sort(levels.begin(), levels.end(), [&](int la, int lb) {
      const int oa = e1.from_plus ? 4 - la : la;
      const int ob = e1.from_plus ? 4 - lb : lb;
      return oa < ob;
    });
    const int segments = std::max(2, static_cast<int>(ch.trace.size()));
    for (int level : levels) {
      for (int side = 0; side < 2; ++side) {
        const VertexId u = side == 0 ? ctx.vertex_sides.at(e1.col[level]).first
                                     : ctx.vertex_sides.at(e1.col[level]).second;
        const VertexId w = side == 0 ? ctx.vertex_sides.at(e2.col[level]).first
                                     : ctx.vertex_sides.at(e2.col[level]).second;
        const FaceId face = cap_face_containing(work, ctx.cap_threshold, u, w);
        EdgePath arc = split_face_with_arc(work, face, u, w, segments);
        ctx.chord_arcs[{side, ci, level}] = std::move(arc);
      }
    }
  }

  // Cap-side signs: computed while the cycle's cap-side anchor faces are
  // still intact; later cap subdivisions only touch cap-side faces with
  // larger ids, so the sides stay anchored on the outer uses.
  const int capsign_a = side_sign(work, cut.side_a, cap_face_a);
  const int capsign_b = side_sign(work, cut.side_b, cap_face_b);

  // Trace-circle push-in families; root families live in the region of the
  // first cap boundary edge.
  const FaceId region_a = cap_face_of_edge(work, ctx.cap_threshold, dart_edge(cut.side_a.front()));
  ctx.cap_a = build_cap_circles(work, region_a, cfg);
  const FaceId region_b = cap_face_of_edge(work, ctx.cap_threshold, dart_edge(cut.side_b.front()));
  ctx.cap_b = build_cap_circles(work, region_b, cfg);
  ctx.cap_circle_a = cut.side_a;
  ctx.cap_circle_b = cut.side_b;
  if (!work.is_orientable()) fail(ErrorKind::IncoherentMove, "2-handle result is not orientable");
  ctx.cap_a.cap_side_sign = capsign_a;
  ctx.cap_b.cap_side_sign = capsign_b;
  ctx.surface = std::move(work);
  return ctx;
}

AlteringSurface ladder_annulus_member(int length, const EdgePath& cycle_a, int sign_a,
                                      const EdgePath& cycle_b, int sign_b) {
  SurfaceComplex an = make_ladder_annulus(std::max(1, length), 1);
  auto circles = an.boundary_circles();
  AlteringSurface out;
  out.surface = std::move(an);
  Attachment a;
  a.circle = boundary_circle_label(circles[0]);
  a.host_cycle = cycle_a;
  a.sign = sign_a;
  Attachment b;
  b.circle = boundary_circle_label(circles[1]);
  b.host_cycle = cycle_b;
  b.sign = sign_b;
  out.attachments = {a, b};
  return out;
}

}  // namespace

namespace {

// Everything recorded about the push-off sheets and wall material assembled
// into one working complex; attachments are either direct (whole boundary
// circles onto host cycles) or stitched edge-by-edge through host targets.
struct Assembly {
  SurfaceComplex big;
  std::map<EdgeId, Dart> target;  // big edge forward -> host dart
  struct Direct {
    EdgeId label;  // boundary circle label in big
    EdgePath host;
    int sign;
  };
  std::vector<Direct> direct;
  std::set<EdgeId> sheet_edges;  // member-derived material
  // Rail witness info per targeted b-edge: (member, attachment, plus sheet).
  std::map<EdgeId, std::tuple<int, int, bool>> rail_info;
};

}  // namespace

TransportStep transport_two_handle(const SurfaceComplex& host, const SAS& sas,
                                   const TwoHandle& move, const ChordCircleConfig& cfg,
                                   const std::vector<SurfaceType>* seifert_before_hint) {
  TransportReport rep = base_report(host, sas, "2-handle", seifert_before_hint);
  rep.inventory = chord_circle_inventory(cfg);

  TwoHandleContext ctx = prepare_two_handle(host, sas, move, cfg);
  const int P = static_cast<int>(ctx.events.size());
  const int N = static_cast<int>(ctx.cap_circle_a.size());

  // Normalized chord traces (oriented from end_a's crossing to end_b's).
  std::vector<EdgePath> chord_trace(cfg.chords.size());
  for (size_t ci = 0; ci < cfg.chords.size(); ++ci) {
    const ChordSpec& ch = cfg.chords[ci];
    const SurfaceComplex& mem = sas.members[ch.member].surface;
    const MarkEvent& e1 = ctx.events[ch.end_a];
    const Attachment& att = sas.members[e1.member].attachments[e1.attachment];
    EdgePath aligned_circle;
    for (const EdgePath& circle : mem.boundary_circles()) {
      if (boundary_circle_label(circle) == att.circle) aligned_circle = circle;
    }
    const VertexId v1 = mem.dart_tail(aligned_circle[e1.gamma_pos % aligned_circle.size()]);
    chord_trace[ci] = (mem.dart_tail(ch.trace.front()) == v1) ? ch.trace : reverse_path(ch.trace);
  }

  Assembly as;
  SAS out;
  std::vector<int> touched;
  for (size_t mi = 0; mi < sas.members.size(); ++mi) {
    if (!ctx.meeting.count(static_cast<int>(mi))) {
      out.members.push_back(sas.members[mi]);
    }
  }
  const int carried = static_cast<int>(out.members.size());
  (void)carried;

  // Seam bookkeeping: per (event index, plus sheet): the 2-edge seam path in
  // big coordinates.
  std::map<std::pair<int, bool>, EdgePath> sheet_seams;

  for (int mi : ctx.meeting) {
    const AlteringSurface& member = sas.members[mi];
    auto member_circles = member.surface.boundary_circles();
    for (int side = 0; side < 2; ++side) {
      const bool plus = (side == 0);
      SurfaceComplex sheet = member.surface;
      struct DirectLocal {
        EdgeId label;
        EdgePath host;
        int sign;
      };
      std::vector<DirectLocal> direct_local;
      std::map<EdgeId, Dart> target_local;
      std::map<EdgeId, std::tuple<int, int, bool>> railinfo_local;
      std::vector<std::pair<int, EdgePath>> seams_local;  // event index -> seam path

      // Trace-circle cuts: both copies attach directly to the cap push-ins
      // at this sheet's level.
      for (size_t w = 0; w < cfg.circles.size(); ++w) {
        if (cfg.circles[w].member != mi) continue;
        CutResult cut = cut_along_cycle(sheet, cfg.circles[w].trace);
        sheet = std::move(cut.complex);
        const int level = plus ? 3 : 1;
        direct_local.push_back({boundary_circle_label(cut.side_a),
                                ctx.cap_a.families[w].rings[level],
                                ctx.cap_a.families[w].inward_sign[level]});
        direct_local.push_back({boundary_circle_label(cut.side_b),
                                ctx.cap_b.families[w].rings[level],
                                ctx.cap_b.families[w].inward_sign[level]});
      }
      // Chord-trace cuts: arc copies are stitched onto the cap chord arcs at
      // this sheet's level.
      for (size_t ci = 0; ci < cfg.chords.size(); ++ci) {
        if (cfg.chords[ci].member != mi) continue;
        CutArcResult cut = cut_along_arc(sheet, chord_trace[ci]);
        sheet = std::move(cut.complex);
        const int level = plus ? 3 : 1;
        const EdgePath& arc_a = ctx.chord_arcs.at({0, static_cast<int>(ci), level});
        const EdgePath& arc_b = ctx.chord_arcs.at({1, static_cast<int>(ci), level});
        for (size_t i = 0; i < cut.side_a.size(); ++i) {
          const Dart d = cut.side_a[i];
          target_local[dart_edge(d)] = dart_reversed(d) ? dart_flip(arc_a[i]) : arc_a[i];
        }
        for (size_t i = 0; i < cut.side_b.size(); ++i) {
          const Dart d = cut.side_b[i];
          target_local[dart_edge(d)] = dart_reversed(d) ? dart_flip(arc_b[i]) : arc_b[i];
        }
      }
      // Attachment circles: crossing circles get edgewise rail targets and
      // seams; others attach directly to their rail ring.
      for (size_t ai = 0; ai < member.attachments.size(); ++ai) {
        const Attachment& att = member.attachments[ai];
        const RailSet& rails = ctx.rails.at({mi, static_cast<int>(ai)});
        const bool plus_toward_a = att.sign > 0;
        const EdgePath& rail = plus ? (plus_toward_a ? rails.rings[0] : rails.rings[2])
                                    : (plus_toward_a ? rails.rings[2] : rails.rings[0]);
        EdgePath circle;
        for (const auto& cpath : member_circles) {
          if (boundary_circle_label(cpath) == att.circle) circle = cpath;
        }
        std::vector<int> my_events;
        for (int e = 0; e < P; ++e) {
          if (ctx.events[e].member == mi && ctx.events[e].attachment == static_cast<int>(ai)) {
            my_events.push_back(e);
          }
        }
        if (my_events.empty()) {
          const EdgePath& toward = plus ? (plus_toward_a ? rails.outer_a : rails.outer_b)
                                        : rails.rings[1];
          direct_local.push_back(
              {att.circle, rail,
               side_sign(ctx.surface, rail,
                         face_adjacent_to_both(ctx.surface, rail, toward))});
          continue;
        }
        // Edgewise targets along the rail, with seams around each crossing.
        const int len = static_cast<int>(circle.size());
        for (int i = 0; i < len; ++i) {
          const Dart d = circle[i];
          target_local[dart_edge(d)] = dart_reversed(d) ? dart_flip(rail[i]) : rail[i];
          railinfo_local[dart_edge(d)] = {mi, static_cast<int>(ai), plus};
        }
        for (int e : my_events) {
          const int p = ctx.events[e].gamma_pos % len;
          const int prev = (p + len - 1) % len;
          // The halves adjacent to the crossing vertex form the seam; the
          // outer halves keep the rail targets.
          EdgePath chain_prev = sheet.subdivide_edge(dart_edge(circle[prev]), 2);
          EdgePath chain_next = sheet.subdivide_edge(dart_edge(circle[p]), 2);
          const bool prev_fwd = !dart_reversed(circle[prev]);
          const bool next_fwd = !dart_reversed(circle[p]);
          const EdgeId seam1 = dart_edge(prev_fwd ? chain_prev[1] : chain_prev[0]);
          const EdgeId seam2 = dart_edge(next_fwd ? chain_next[0] : chain_next[1]);
          const EdgeId keep_prev = dart_edge(prev_fwd ? chain_prev[0] : chain_prev[1]);
          const EdgeId keep_next = dart_edge(next_fwd ? chain_next[1] : chain_next[0]);
          // Reassign targets: the kept halves carry the rail edges.
          target_local.erase(dart_edge(circle[prev]));
          target_local.erase(dart_edge(circle[p]));
          railinfo_local.erase(dart_edge(circle[prev]));
          railinfo_local.erase(dart_edge(circle[p]));
          const Dart t_prev = dart_reversed(circle[prev]) ? dart_flip(rail[prev]) : rail[prev];
          const Dart t_next = dart_reversed(circle[p]) ? dart_flip(rail[p]) : rail[p];
          target_local[keep_prev] = t_prev;
          target_local[keep_next] = t_next;
          railinfo_local[keep_prev] = {mi, static_cast<int>(ai), plus};
          railinfo_local[keep_next] = {mi, static_cast<int>(ai), plus};
          EdgePath seam;
          seam.push_back(make_dart(seam1, !prev_fwd));
          seam.push_back(make_dart(seam2, !next_fwd));
          seams_local.push_back({e, seam});
        }
      }
      // Union into the big complex and translate records.
      DisjointUnionResult u = disjoint_union(as.big, sheet);
      as.big = std::move(u.complex);
      auto m_edge = [&u](EdgeId e) { return u.emap.at(e); };
      for (const auto& [e, t] : target_local) as.target[m_edge(e)] = t;
      for (const auto& [e, info] : railinfo_local) as.rail_info[m_edge(e)] = info;
      for (const auto& d : direct_local) as.direct.push_back({m_edge(d.label), d.host, d.sign});
      for (const auto& [ev, seam] : seams_local) {
        EdgePath mapped;
        for (Dart d : seam) mapped.push_back(make_dart(m_edge(dart_edge(d)), dart_reversed(d)));
        sheet_seams[{ev, plus}] = mapped;
      }
      for (const auto& [e, rec] : sheet.edges()) {
        (void)rec;
        as.sheet_edges.insert(m_edge(e));
      }
    }
  }

  // Wall strips between consecutive marks, and chord wall sheets, built as
  // fresh quad rows carrying cap targets on their long edges.
  struct StripEnds {
    EdgePath left_vertical;   // oriented cap_a to cap_b
    EdgePath right_vertical;
  };
  std::vector<StripEnds> strips(P);
  auto add_quad_row = [&](const std::vector<Dart>& bottom_targets,
                          const std::vector<Dart>& top_targets) -> StripEnds {
    const int w = static_cast<int>(bottom_targets.size());
    SurfaceComplex piece;
    std::vector<VertexId> bot(w + 1), top(w + 1);
    for (int i = 0; i <= w; ++i) bot[i] = piece.add_vertex();
    for (int i = 0; i <= w; ++i) top[i] = piece.add_vertex();
    std::vector<EdgeId> be(w), te(w), ve(w + 1);
    for (int i = 0; i < w; ++i) be[i] = piece.add_edge(bot[i], bot[i + 1]);
    for (int i = 0; i < w; ++i) te[i] = piece.add_edge(top[i], top[i + 1]);
    for (int i = 0; i <= w; ++i) ve[i] = piece.add_edge(bot[i], top[i]);
    for (int i = 0; i < w; ++i) {
      piece.add_face({make_dart(be[i], false), make_dart(ve[i + 1], false),
                      make_dart(te[i], true), make_dart(ve[i], true)});
    }
    DisjointUnionResult u = disjoint_union(as.big, piece);
    as.big = std::move(u.complex);
    for (int i = 0; i < w; ++i) {
      as.target[u.emap.at(be[i])] = bottom_targets[i];
      as.target[u.emap.at(te[i])] = top_targets[i];
    }
    StripEnds ends;
    ends.left_vertical = {make_dart(u.emap.at(ve[0]), false)};
    ends.right_vertical = {make_dart(u.emap.at(ve[w]), false)};
    return ends;
  };

  auto line_offsets = [&](const MarkEvent& ev, bool chord_end) {
    (void)ev;
    return chord_end ? std::pair<int, int>{0, 4} : std::pair<int, int>{1, 3};
  };
  const std::vector<MarkInfo> marks = P > 0 ? layout_marks(cfg) : std::vector<MarkInfo>{};
  if (P > 0) {
    for (int i = 0; i < P; ++i) {
      const MarkEvent& ev = ctx.events[i];
      const MarkEvent& nxt = ctx.events[(i + 1) % P];
      const auto [b_off, a_off] = line_offsets(ev, marks[i].is_chord_end);
      const auto [nb_off, na_off] = line_offsets(nxt, marks[(i + 1) % P].is_chord_end);
      (void)b_off;
      (void)na_off;
      const int from = (ev.anchor + a_off) % N;
      const int to = (nxt.anchor + nb_off) % N;
      std::vector<Dart> bottom, top;
      for (int t = from; t != to; t = (t + 1) % N) {
        bottom.push_back(ctx.cap_circle_a[t]);
        top.push_back(ctx.cap_circle_b[t]);
      }
      if (bottom.empty()) fail(ErrorKind::ConfigInvalid, "adjacent marks leave no wall strip");
      strips[i] = add_quad_row(bottom, top);
    }
    // Wall sheets along each chord at collar levels -1 and +1.
    for (size_t ci = 0; ci < cfg.chords.size(); ++ci) {
      for (int level : {0, 4}) {
        const EdgePath& arc_a = ctx.chord_arcs.at({0, static_cast<int>(ci), level});
        const EdgePath& arc_b = ctx.chord_arcs.at({1, static_cast<int>(ci), level});
        StripEnds sheet_ends = add_quad_row(arc_a, arc_b);
        // Glue to the adjacent strips at both chord-end lines.
        for (int endz = 0; endz < 2; ++endz) {
          const int pos = endz == 0 ? cfg.chords[ci].end_a : cfg.chords[ci].end_b;
          const MarkEvent& ev = ctx.events[pos];
          const int offset = ev.from_plus ? 4 - level : level;  // 0 or 4
          const EdgePath& vert = endz == 0 ? sheet_ends.left_vertical : sheet_ends.right_vertical;
          const EdgePath& strip_vert =
              offset == 0 ? strips[(pos + P - 1) % P].right_vertical : strips[pos].left_vertical;
          GlueArcResult g = glue_boundary_arcs(as.big, strip_vert, reverse_path(vert));
          as.big = std::move(g.complex);
        }
      }
    }
    // Boundary-point seams: glue the adjacent strip verticals onto the sheet
    // seams.  The vertical end on the cap where the preceding rail arc lands
    // must meet the seam's entry corner.
    std::set<VertexId> cap_a_vertices;
    for (Dart d : ctx.cap_circle_a) cap_a_vertices.insert(ctx.surface.dart_tail(d));
    for (int i = 0; i < P; ++i) {
      if (marks[i].is_chord_end) continue;
      const MarkEvent& ev = ctx.events[i];
      for (int off : {1, 3}) {
        const int level = ev.from_plus ? 4 - off : off;  // 1 or 3
        const bool plus_sheet = (level == 3);
        auto seam_it = sheet_seams.find({i, plus_sheet});
        if (seam_it == sheet_seams.end()) {
          fail(ErrorKind::IntersectionMismatch, "missing sheet seam for a boundary point");
        }
        const EdgePath& strip_vert =
            off == 1 ? strips[(i + P - 1) % P].right_vertical : strips[i].left_vertical;
        // The member boundary enters the seam after the rail arc ending at
        // this crossing's cut copy; that copy lies on one cap circle.
        const bool plus_toward_a =
            sas.members[ev.member].attachments[ev.attachment].sign > 0;
        const RailSet& rails = ctx.rails.at({ev.member, ev.attachment});
        const EdgePath& rail = plus_sheet ? (plus_toward_a ? rails.rings[0] : rails.rings[2])
                                          : (plus_toward_a ? rails.rings[2] : rails.rings[0]);
        const int len = static_cast<int>(rail.size());
        const int prev = (ev.gamma_pos + len - 1) % len;
        const VertexId landing = ctx.surface.dart_head(rail[prev]);
        const bool lands_on_a = cap_a_vertices.count(landing) > 0;
        // Pairing identifies tail(seam) with head(vertical): orient the
        // vertical so its head is on the landing cap (tail is the cap_a end).
        const EdgePath vert = lands_on_a ? reverse_path(strip_vert) : strip_vert;
        GlueArcResult g = glue_boundary_arcs(as.big, seam_it->second, vert);
        as.big = std::move(g.complex);
      }
    }
  }

  // Split the assembly into members and stitch the attachments.
  int wall_components = 0;
  if (!as.big.vertices().empty()) {
    for (const auto& comp : as.big.components()) {
      AlteringSurface piece;
      piece.surface = as.big.restricted_to(comp);
      bool has_sheet = false;
      for (EdgeId e : comp.edges) {
        if (as.sheet_edges.count(e)) has_sheet = true;
      }
      if (has_sheet) {
        rep.inventory.pushoff_components += 1;
      } else {
        ++wall_components;
      }
      std::set<EdgeId> direct_labels;
      for (const auto& d : as.direct) {
        if (!comp.edges.count(d.label)) continue;
        Attachment a;
        a.circle = d.label;
        a.host_cycle = d.host;
        a.sign = d.sign;
        piece.attachments.push_back(a);
        direct_labels.insert(d.label);
      }
      for (const EdgePath& circle : piece.surface.boundary_circles()) {
        const EdgeId label = boundary_circle_label(circle);
        if (direct_labels.count(label)) continue;
        EdgePath stitched;
        for (Dart d : circle) {
          auto it = as.target.find(dart_edge(d));
          if (it == as.target.end()) {
            fail(ErrorKind::InvalidComplex, "assembled boundary edge without a host target");
          }
          stitched.push_back(dart_reversed(d) ? dart_flip(it->second) : it->second);
        }
        if (!path_chains(ctx.surface, stitched, true)) {
          fail(ErrorKind::InvalidComplex, "stitched attachment cycle does not chain");
        }
        // Sign witness: a rail edge if present, else the cap side of a wall
        // edge.
        int sign = 0;
        for (Dart d : circle) {
          auto rit = as.rail_info.find(dart_edge(d));
          if (rit == as.rail_info.end()) continue;
          const auto [mi, ai, plus] = rit->second;
          const RailSet& rails = ctx.rails.at({mi, ai});
          const bool plus_toward_a = sas.members[mi].attachments[ai].sign > 0;
          const EdgePath& toward = plus ? (plus_toward_a ? rails.outer_a : rails.outer_b)
                                        : rails.rings[1];
          const Dart rail_dart = as.target.at(dart_edge(d));
          const EdgePath rail_probe{rail_dart};
          sign = side_sign(ctx.surface, stitched,
                           face_adjacent_to_both(ctx.surface, rail_probe, toward));
          break;
        }
        if (sign == 0) {
          // Wall component: plus copy toward the caps.  Anchor on a cap
          // boundary edge (one side outside the cap) rather than a push-in
          // arc (both sides inside).
          auto uses = ctx.surface.edge_uses();
          EdgeId wall_edge = -1;
          for (Dart d : stitched) {
            for (const EdgeUse& use : uses.at(dart_edge(d))) {
              if (use.face < ctx.cap_threshold) wall_edge = dart_edge(d);
            }
            if (wall_edge >= 0) break;
          }
          if (wall_edge < 0) {
            fail(ErrorKind::InvalidComplex, "wall component without a cap boundary edge");
          }
          sign = side_sign(ctx.surface, stitched,
                           cap_face_of_edge(ctx.surface, ctx.cap_threshold, wall_edge));
        }
        Attachment a;
        a.circle = label;
        a.host_cycle = std::move(stitched);
        a.sign = sign;
        piece.attachments.push_back(a);
      }
      touched.push_back(static_cast<int>(out.members.size()));
      out.members.push_back(std::move(piece));
    }
  }

  // Wall annulus A1 exists exactly when no mark cuts the wall.
  if (P == 0) {
    touched.push_back(static_cast<int>(out.members.size()));
    out.members.push_back(ladder_annulus_member(static_cast<int>(ctx.cap_circle_a.size()),
                                                ctx.cap_circle_a, ctx.cap_a.cap_side_sign,
                                                ctx.cap_circle_b, ctx.cap_b.cap_side_sign));
  } else {
    if (wall_components != rep.inventory.annuli_a) {
      fail(ErrorKind::InvalidComplex, "wall component count disagrees with the A/B inventory");
    }
  }
  // Trace annuli C at the outermost/innermost push-in levels, plus copies
  // inward on both sides.
  for (size_t w = 0; w < cfg.circles.size(); ++w) {
    touched.push_back(static_cast<int>(out.members.size()));
    out.members.push_back(ladder_annulus_member(
        static_cast<int>(ctx.cap_a.families[w].rings[0].size()), ctx.cap_a.families[w].rings[0],
        ctx.cap_a.families[w].inward_sign[0], ctx.cap_b.families[w].rings[0],
        ctx.cap_b.families[w].inward_sign[0]));
    touched.push_back(static_cast<int>(out.members.size()));
    out.members.push_back(ladder_annulus_member(
        static_cast<int>(ctx.cap_a.families[w].rings[4].size()), ctx.cap_a.families[w].rings[4],
        ctx.cap_a.families[w].inward_sign[4], ctx.cap_b.families[w].rings[4],
        ctx.cap_b.families[w].inward_sign[4]));
  }

  out = resolve_sas_orientations(ctx.surface, out, touched);
  finish_report(rep, ctx.surface, out);

  TransportStep step;
  step.surface = std::move(ctx.surface);
  step.sas = std::move(out);
  step.report = std::move(rep);
  return step;
}

TransportStep reduce_annulus_case(const SurfaceComplex& host, const SAS& sas,
                                  const TwoHandle& move, const ChordCircleConfig& cfg,
                                  const std::vector<SurfaceType>* seifert_before_hint) {
  if (!cfg.boundary_points.empty() || !cfg.chords.empty() || cfg.circles.size() != 1) {
    fail(ErrorKind::NotReducibleCase,
         "reduction needs exactly one annulus intersection and nothing else");
  }
  TransportReport rep = base_report(host, sas, "2-handle-reduced", seifert_before_hint);
  rep.inventory = chord_circle_inventory(cfg);

  TwoHandleContext ctx = prepare_two_handle(host, sas, move, cfg);
  const int owner = cfg.circles[0].member;

  SAS out;
  std::vector<int> touched;
  for (size_t mi = 0; mi < sas.members.size(); ++mi) {
    if (static_cast<int>(mi) != owner) {
      out.members.push_back(sas.members[mi]);
      continue;
    }
    const AlteringSurface& member = sas.members[mi];
    AlteringSurface cutm;
    cutm.surface = member.surface;
    // Original circles now ride the central rail (the member keeps its
    // position; only the part inside the handle is removed).  The plus copy
    // keeps pointing in the member's +collar direction.
    for (size_t ai = 0; ai < member.attachments.size(); ++ai) {
      Attachment a = member.attachments[ai];
      const RailSet& rails = ctx.rails.at({static_cast<int>(mi), static_cast<int>(ai)});
      const EdgePath& toward = (a.sign > 0) ? rails.rings[0] : rails.rings[2];
      a.host_cycle = rails.rings[1];
      a.sign = side_sign(ctx.surface, rails.rings[1],
                         face_adjacent_to_both(ctx.surface, rails.rings[1], toward));
      cutm.attachments.push_back(a);
    }
    CutResult cut = cut_along_cycle(cutm.surface, cfg.circles[0].trace);
    cutm.surface = std::move(cut.complex);
    Attachment left;
    left.circle = boundary_circle_label(cut.side_a);
    left.host_cycle = ctx.cap_a.families[0].rings[2];
    left.sign = ctx.cap_a.families[0].inward_sign[2];
    Attachment right;
    right.circle = boundary_circle_label(cut.side_b);
    right.host_cycle = ctx.cap_b.families[0].rings[2];
    right.sign = ctx.cap_b.families[0].inward_sign[2];
    cutm.attachments.push_back(left);
    cutm.attachments.push_back(right);
    for (AlteringSurface& piece : split_member_components(cutm)) {
      rep.inventory.pushoff_components += 1;
      touched.push_back(static_cast<int>(out.members.size()));
      out.members.push_back(std::move(piece));
    }
  }
  touched.push_back(static_cast<int>(out.members.size()));
  out.members.push_back(ladder_annulus_member(
      static_cast<int>(ctx.cap_a.families[0].rings[0].size()), ctx.cap_a.families[0].rings[0],
      ctx.cap_a.families[0].inward_sign[0], ctx.cap_b.families[0].rings[0],
      ctx.cap_b.families[0].inward_sign[0]));
  touched.push_back(static_cast<int>(out.members.size()));
  out.members.push_back(ladder_annulus_member(
      static_cast<int>(ctx.cap_a.families[0].rings[4].size()), ctx.cap_a.families[0].rings[4],
      ctx.cap_a.families[0].inward_sign[4], ctx.cap_b.families[0].rings[4],
      ctx.cap_b.families[0].inward_sign[4]));
  // The wall annulus is intentionally absent: this is what shrinks the SAS.
  out = resolve_sas_orientations(ctx.surface, out, touched);
  finish_report(rep, ctx.surface, out);

  TransportStep step;
  step.surface = std::move(ctx.surface);
  step.sas = std::move(out);
  step.report = std::move(rep);
  return step;
}

// ---------------------------------------------------------------------------
// Sequence driver
// ---------------------------------------------------------------------------

TransportSequenceResult transport_sequence(const SurfaceComplex& start, const TubeSequence& seq) {
  for (const auto& t : start.classify()) {
    if (t.boundary == 0) fail(ErrorKind::InvalidArgument, "start surface has a closed component");
  }
  TransportSequenceResult out;
  out.surfaces.push_back(start);
  out.systems.push_back(SAS{});
  out.seifert_trace.push_back(yields(start, SAS{}).seifert_part);

  for (size_t j = 0; j < seq.moves.size(); ++j) {
    const TubeMove& move = seq.moves[j];
    try {
      const std::vector<SurfaceType>* hint = &out.seifert_trace.back();
      TransportStep step = [&] {
        if (move.kind == TubeMove::Kind::OneHandle) {
          return transport_one_handle(out.surfaces.back(), out.systems.back(), move.one,
                                      move.one_payload.value_or(OneHandleIntersections{}), hint);
        }
        return transport_two_handle(out.surfaces.back(), out.systems.back(), move.two,
                                    move.two_payload.value_or(ChordCircleConfig{}), hint);
      }();
      for (const auto& t : step.surface.classify()) {
        if (t.boundary == 0) {
          fail(ErrorKind::InvalidArgument, "move leaves the Seifert class (closed component)");
        }
      }
      out.surfaces.push_back(std::move(step.surface));
      out.systems.push_back(std::move(step.sas));
      out.seifert_trace.push_back(step.report.seifert_after);
      out.reports.push_back(std::move(step.report));
    } catch (const TopologyError& err) {
      fail(err.kind(), "transport step " + std::to_string(j) + ": " + err.what());
    }
  }
  return out;
}

}  // namespace seifalt
