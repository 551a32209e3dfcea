#include "seifalt/generator.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace seifalt {

namespace {

std::set<VertexId> boundary_vertices(const SurfaceComplex& c) {
  std::set<VertexId> out;
  auto uses = c.edge_uses();
  for (const auto& [e, u] : uses) {
    if (u.size() != 1) continue;
    out.insert(c.edge(e).tail);
    out.insert(c.edge(e).head);
  }
  return out;
}

EdgePath canonical_cycle_key(const EdgePath& cycle) {
  EdgePath a = canonical_rotation(cycle);
  EdgePath b = canonical_rotation(reverse_path(cycle));
  return std::min(a, b);
}

}  // namespace

std::vector<EdgePath> find_interior_cycles(const SurfaceComplex& c, int max_len, int max_count) {
  const auto bverts = boundary_vertices(c);
  auto uses = c.edge_uses();
  // Adjacency over interior edges between interior vertices.
  std::map<VertexId, std::vector<Dart>> adj;
  for (const auto& [e, u] : uses) {
    if (u.size() != 2) continue;
    const EdgeRec& rec = c.edge(e);
    if (bverts.count(rec.tail) || bverts.count(rec.head)) continue;
    adj[rec.tail].push_back(make_dart(e, false));
    adj[rec.head].push_back(make_dart(e, true));
  }
  std::set<EdgePath> seen;
  std::vector<EdgePath> out;
  for (const auto& [v0, darts0] : adj) {
    (void)darts0;
    // DFS for simple cycles through v0.
    struct Frame {
      VertexId at;
      size_t next = 0;
    };
    EdgePath path;
    std::vector<VertexId> visited{v0};
    std::vector<Frame> stack{Frame{v0, 0}};
    while (!stack.empty()) {
      if (static_cast<int>(out.size()) >= max_count) return out;
      Frame& fr = stack.back();
      const auto& darts = adj.at(fr.at);
      if (fr.next >= darts.size() || static_cast<int>(path.size()) >= max_len) {
        stack.pop_back();
        if (!path.empty()) {
          path.pop_back();
          visited.pop_back();
        }
        continue;
      }
      const Dart d = darts[fr.next++];
      if (!path.empty() && dart_edge(d) == dart_edge(path.back())) continue;
      const VertexId to = c.dart_head(d);
      if (to == v0 && path.size() >= 1) {
        EdgePath cycle = path;
        cycle.push_back(d);
        EdgePath key = canonical_cycle_key(cycle);
        if (seen.insert(key).second) out.push_back(cycle);
        continue;
      }
      if (std::find(visited.begin(), visited.end(), to) != visited.end()) continue;
      path.push_back(d);
      visited.push_back(to);
      stack.push_back(Frame{to, 0});
    }
  }
  return out;
}

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

SurfaceComplex random_host(Rng& rng) {
  // Disk or annulus base with a few inscribed interior faces, occasionally a
  // pre-attached tube for genus.
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> extra(1, 3);
  SurfaceComplex c;
  switch (pick(rng)) {
    case 0:
      c = make_disk(4);
      break;
    case 1:
      c = make_ladder_annulus(3, 1);
      break;
    default:
      c = make_disk(6);
      break;
  }
  const int inscriptions = extra(rng);
  for (int i = 0; i < inscriptions; ++i) {
    auto faces = interior_faces(c);
    FaceId target = faces.empty() ? c.faces().begin()->first : faces[rng() % faces.size()];
    c = inscribe_circle(c, target).complex;
  }
  if ((rng() & 3) == 0) {
    auto faces = interior_faces(c);
    if (faces.size() >= 2) {
      const size_t i = rng() % faces.size();
      size_t j = rng() % faces.size();
      if (i != j) {
        for (bool rev : {false, true}) {
          try {
            c = attach_one_handle(c, OneHandle{faces[i], faces[j], rev}).complex;
            break;
          } catch (const TopologyError&) {
          }
        }
      }
    }
  }
  return c;
}

bool random_altering_surface(Rng& rng, const SurfaceComplex& host,
                             const std::vector<EdgePath>& occupied, AlteringSurface* out) {
  auto cycles = find_interior_cycles(host, 8, 64);
  std::vector<EdgePath> free;
  for (const EdgePath& cy : cycles) {
    bool ok = true;
    for (const EdgePath& used : occupied) {
      if (!paths_vertex_disjoint(host, cy, true, used, true)) ok = false;
    }
    if (ok) free.push_back(cy);
  }
  if (free.empty()) return false;
  std::shuffle(free.begin(), free.end(), rng);

  // Disk member or annulus member along two disjoint cycles.
  const bool want_annulus = (rng() & 1) && free.size() >= 2;
  if (want_annulus) {
    for (size_t i = 0; i + 1 < free.size(); ++i) {
      if (!paths_vertex_disjoint(host, free[0], true, free[i + 1], true)) continue;
      SurfaceComplex an = make_ladder_annulus(3, 1);
      auto circles = an.boundary_circles();
      AlteringSurface f;
      f.surface = std::move(an);
      f.attachments = {Attachment{boundary_circle_label(circles[0]), free[0], (rng() & 1) ? 1 : -1},
                       Attachment{boundary_circle_label(circles[1]), free[i + 1], (rng() & 1) ? 1 : -1}};
      *out = std::move(f);
      return true;
    }
  }
  SurfaceComplex d = make_disk(3);
  d = inscribe_circle(d, d.faces().begin()->first).complex;
  AlteringSurface f;
  Attachment a;
  a.circle = boundary_circle_label(d.boundary_circles()[0]);
  a.host_cycle = free[0];
  a.sign = (rng() & 1) ? 1 : -1;
  f.surface = std::move(d);
  f.attachments.push_back(a);
  *out = std::move(f);
  return true;
}

namespace {

std::vector<EdgePath> attachment_cycles(const SAS& sas) {
  std::vector<EdgePath> out;
  for (const auto& m : sas.members) {
    for (const auto& a : m.attachments) out.push_back(a.host_cycle);
  }
  return out;
}

bool cycle_clear_of(const SurfaceComplex& host, const EdgePath& cycle,
                    const std::vector<EdgePath>& occupied) {
  for (const EdgePath& used : occupied) {
    if (!paths_vertex_disjoint(host, cycle, true, used, true)) return false;
  }
  return true;
}

int total_genus(const SurfaceComplex& c) {
  int g = 0;
  for (const auto& t : c.classify()) g += t.genus;
  return g;
}

}  // namespace

GeneratedScenario generate_scenario(std::uint64_t seed, int steps) {
  Rng rng(seed);
  GeneratedScenario scenario;
  scenario.start = random_host(rng);

  SurfaceComplex current = scenario.start;
  SAS sas;
  scenario.transcript.surfaces.push_back(current);
  scenario.transcript.systems.push_back(sas);
  scenario.transcript.seifert_trace.push_back(yields(current, sas).seifert_part);

  for (int step = 0; step < steps; ++step) {
    const bool prefer_two = total_genus(current) >= 4 || (rng() & 1);
    bool made_move = false;

    for (int attempt = 0; attempt < 2 && !made_move; ++attempt) {
      const bool try_two = (attempt == 0) ? prefer_two : !prefer_two;
      if (try_two) {
        // 2-handle: pick an interior cycle disjoint from attachments that
        // keeps the surface in the Seifert class.
        auto occupied = attachment_cycles(sas);
        auto cycles = find_interior_cycles(current, 8, 64);
        std::shuffle(cycles.begin(), cycles.end(), rng);
        for (const EdgePath& cy : cycles) {
          if (!cycle_clear_of(current, cy, occupied)) continue;
          SurfaceComplex result;
          try {
            result = surger_two_handle(current, TwoHandle{cy}).complex;
          } catch (const TopologyError&) {
            continue;
          }
          bool seifert = true;
          for (const auto& t : result.classify()) {
            if (t.boundary == 0) seifert = false;
          }
          if (!seifert) continue;
          // Generic circle payload: a few members donate a trace circle.
          ChordCircleConfig cfg;
          std::uniform_int_distribution<int> mdist(0, 2);
          int want_m = mdist(rng);
          for (size_t mi = 0; mi < sas.members.size() && want_m > 0; ++mi) {
            auto traces = find_interior_cycles(sas.members[mi].surface, 8, 8);
            if (traces.empty()) continue;
            cfg.circles.push_back(CircleSpec{static_cast<int>(mi), -1, traces[rng() % traces.size()]});
            --want_m;
          }
          TubeMove move;
          move.kind = TubeMove::Kind::TwoHandle;
          move.two = TwoHandle{cy};
          move.two_payload = cfg;
          try {
            TransportStep ts = transport_two_handle(current, sas, move.two, cfg,
                                                    &scenario.transcript.seifert_trace.back());
            current = ts.surface;
            sas = ts.sas;
            scenario.seq.moves.push_back(std::move(move));
            scenario.transcript.surfaces.push_back(std::move(ts.surface));
            scenario.transcript.systems.push_back(std::move(ts.sas));
            scenario.transcript.seifert_trace.push_back(ts.report.seifert_after);
            scenario.transcript.reports.push_back(std::move(ts.report));
            made_move = true;
            break;
          } catch (const TopologyError&) {
            continue;
          }
        }
      } else {
        // 1-handle with a generic puncture payload.  Sites must not touch
        // attachment cycles of the carried SAS.
        auto faces = interior_faces(current);
        {
          std::set<EdgeId> occupied;
          for (const auto& m : sas.members) {
            for (const auto& a : m.attachments) {
              for (Dart d : a.host_cycle) occupied.insert(dart_edge(d));
            }
          }
          std::vector<FaceId> clear;
          for (FaceId f : faces) {
            bool ok = true;
            for (Dart d : current.face_word(f)) {
              if (occupied.count(dart_edge(d))) ok = false;
            }
            if (ok) clear.push_back(f);
          }
          faces = std::move(clear);
        }
        if (faces.size() < 2) continue;
        std::shuffle(faces.begin(), faces.end(), rng);
        OneHandleIntersections ix;
        std::uniform_int_distribution<int> kdist(0, 2);
        int want_k = kdist(rng);
        int rank = 0;
        std::set<std::pair<int, FaceId>> used;
        for (int t = 0; t < want_k; ++t) {
          // Pick any member with an interior face not used yet.
          std::vector<std::pair<int, FaceId>> options;
          for (size_t mi = 0; mi < sas.members.size(); ++mi) {
            for (FaceId f : interior_faces(sas.members[mi].surface)) {
              if (!used.count({static_cast<int>(mi), f})) {
                options.push_back({static_cast<int>(mi), f});
              }
            }
          }
          if (options.empty()) break;
          auto choice = options[rng() % options.size()];
          used.insert(choice);
          ix.punctures.push_back(HandlePuncture{choice.first, rank++, choice.second});
        }
        const int k = static_cast<int>(ix.punctures.size());
        std::uniform_int_distribution<int> spare(1, 2);
        for (bool rev : {false, true}) {
          TubeMove move;
          move.kind = TubeMove::Kind::OneHandle;
          move.one = OneHandle{faces[0], faces[1], rev, 2 * k + 1 + 2 * spare(rng)};
          move.one_payload = ix;
          try {
            TransportStep ts = transport_one_handle(current, sas, move.one, ix,
                                                    &scenario.transcript.seifert_trace.back());
            current = ts.surface;
            sas = ts.sas;
            scenario.seq.moves.push_back(std::move(move));
            scenario.transcript.surfaces.push_back(std::move(ts.surface));
            scenario.transcript.systems.push_back(std::move(ts.sas));
            scenario.transcript.seifert_trace.push_back(ts.report.seifert_after);
            scenario.transcript.reports.push_back(std::move(ts.report));
            made_move = true;
            break;
          } catch (const TopologyError&) {
          }
        }
      }
    }
    if (!made_move) break;  // no legal move found; shorter sequence
  }
  return scenario;
}

}  // namespace seifalt
