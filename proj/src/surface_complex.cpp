#include "seifalt/surface_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace seifalt {

namespace {

// Edge-end: (edge, 0 = tail end, 1 = head end).
struct EdgeEnd {
  EdgeId edge;
  int end;
  auto operator<=>(const EdgeEnd&) const = default;
};

// Union-find over arbitrary keys, used for vertex links and components.
template <typename Key>
class KeyedUnionFind {
 public:
  void add(const Key& k) { parent_.emplace(k, k); }
  bool contains(const Key& k) const { return parent_.count(k) > 0; }
  Key find(const Key& k) {
    Key root = k;
    while (parent_.at(root) != root) root = parent_.at(root);
    Key cur = k;
    while (parent_.at(cur) != cur) {
      Key next = parent_.at(cur);
      parent_.at(cur) = root;
      cur = next;
    }
    return root;
  }
  void unite(const Key& a, const Key& b) { parent_.at(find(a)) = find(b); }

 private:
  std::map<Key, Key> parent_;
};

EdgeEnd dart_start_end(Dart d) {
  return EdgeEnd{dart_edge(d), dart_reversed(d) ? 1 : 0};
}

EdgeEnd dart_finish_end(Dart d) {
  return EdgeEnd{dart_edge(d), dart_reversed(d) ? 0 : 1};
}

}  // namespace

std::string to_string(const SurfaceType& t) {
  std::ostringstream os;
  os << (t.orientable ? "(orientable, g=" : "(non-orientable, k=") << t.genus
     << ", b=" << t.boundary << ")";
  return os.str();
}

std::string to_string(const std::vector<SurfaceType>& ts) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) os << ", ";
    os << to_string(ts[i]);
  }
  os << "]";
  return os.str();
}

int first_betti(const SurfaceType& t) {
  const int chi = t.orientable ? 2 - 2 * t.genus - t.boundary : 2 - t.genus - t.boundary;
  if (t.boundary > 0) return 1 - chi;
  return t.orientable ? 2 * t.genus : t.genus - 1;
}

// --- low-level construction ---------------------------------------------------

VertexId SurfaceComplex::add_vertex() {
  VertexId v = next_vertex_++;
  vertices_.insert(v);
  return v;
}

EdgeId SurfaceComplex::add_edge(VertexId tail, VertexId head) {
  if (!has_vertex(tail) || !has_vertex(head)) fail(ErrorKind::InvalidComplex, "edge endpoint not a vertex");
  EdgeId e = next_edge_++;
  edges_[e] = EdgeRec{tail, head};
  return e;
}

FaceId SurfaceComplex::add_face(const std::vector<Dart>& word) {
  if (word.empty()) fail(ErrorKind::InvalidComplex, "empty face word");
  for (Dart d : word) {
    if (!has_edge(dart_edge(d))) fail(ErrorKind::InvalidComplex, "face word references unknown edge");
  }
  FaceId f = next_face_++;
  faces_[f] = word;
  return f;
}

void SurfaceComplex::remove_face(FaceId f) {
  if (!faces_.erase(f)) fail(ErrorKind::LabelUnknown, "no such face");
}

void SurfaceComplex::remove_edge(EdgeId e) {
  if (!edges_.erase(e)) fail(ErrorKind::LabelUnknown, "no such edge");
}

void SurfaceComplex::remove_vertex(VertexId v) {
  if (!vertices_.erase(v)) fail(ErrorKind::LabelUnknown, "no such vertex");
}

void SurfaceComplex::set_edge_endpoint(EdgeId e, int end, VertexId v) {
  auto it = edges_.find(e);
  if (it == edges_.end()) fail(ErrorKind::LabelUnknown, "no such edge");
  if (!has_vertex(v)) fail(ErrorKind::LabelUnknown, "no such vertex");
  if (end == 0) {
    it->second.tail = v;
  } else {
    it->second.head = v;
  }
}

void SurfaceComplex::set_face_word(FaceId f, const std::vector<Dart>& word) {
  auto it = faces_.find(f);
  if (it == faces_.end()) fail(ErrorKind::LabelUnknown, "no such face");
  if (word.empty()) fail(ErrorKind::InvalidComplex, "empty face word");
  it->second = word;
}

void SurfaceComplex::absorb(const SurfaceComplex& other) {
  for (VertexId v : other.vertices_) {
    if (!vertices_.insert(v).second) fail(ErrorKind::InvalidComplex, "absorb vertex id collision");
  }
  for (const auto& [e, rec] : other.edges_) {
    if (!edges_.emplace(e, rec).second) fail(ErrorKind::InvalidComplex, "absorb edge id collision");
  }
  for (const auto& [f, word] : other.faces_) {
    if (!faces_.emplace(f, word).second) fail(ErrorKind::InvalidComplex, "absorb face id collision");
  }
  next_vertex_ = std::max(next_vertex_, other.next_vertex_);
  next_edge_ = std::max(next_edge_, other.next_edge_);
  next_face_ = std::max(next_face_, other.next_face_);
}

// --- accessors -----------------------------------------------------------------

const EdgeRec& SurfaceComplex::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) fail(ErrorKind::LabelUnknown, "no such edge: " + std::to_string(e));
  return it->second;
}

const std::vector<Dart>& SurfaceComplex::face_word(FaceId f) const {
  auto it = faces_.find(f);
  if (it == faces_.end()) fail(ErrorKind::LabelUnknown, "no such face: " + std::to_string(f));
  return it->second;
}

VertexId SurfaceComplex::dart_tail(Dart d) const {
  const EdgeRec& e = edge(dart_edge(d));
  return dart_reversed(d) ? e.head : e.tail;
}

VertexId SurfaceComplex::dart_head(Dart d) const {
  const EdgeRec& e = edge(dart_edge(d));
  return dart_reversed(d) ? e.tail : e.head;
}

std::map<EdgeId, std::vector<EdgeUse>> SurfaceComplex::edge_uses() const {
  std::map<EdgeId, std::vector<EdgeUse>> uses;
  for (const auto& [e, rec] : edges_) {
    (void)rec;
    uses[e];
  }
  for (const auto& [f, word] : faces_) {
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
      uses[dart_edge(word[i])].push_back(EdgeUse{f, i});
    }
  }
  return uses;
}

bool SurfaceComplex::is_free_edge(EdgeId e) const {
  int n = 0;
  for (const auto& [f, word] : faces_) {
    for (Dart d : word) {
      if (dart_edge(d) == e) ++n;
    }
  }
  return n == 1;
}

bool SurfaceComplex::is_boundary_vertex(VertexId v) const {
  auto uses = edge_uses();
  for (const auto& [e, u] : uses) {
    if (u.size() != 1) continue;
    const EdgeRec& rec = edge(e);
    if (rec.tail == v || rec.head == v) return true;
  }
  return false;
}

int SurfaceComplex::euler_characteristic() const {
  return vertex_count() - edge_count() + face_count();
}

std::vector<SurfaceComplex::Component> SurfaceComplex::components() const {
  KeyedUnionFind<VertexId> uf;
  for (VertexId v : vertices_) uf.add(v);
  for (const auto& [e, rec] : edges_) {
    (void)e;
    uf.unite(rec.tail, rec.head);
  }
  std::map<VertexId, Component> comps;
  for (VertexId v : vertices_) comps[uf.find(v)].vertices.insert(v);
  for (const auto& [e, rec] : edges_) comps[uf.find(rec.tail)].edges.insert(e);
  for (const auto& [f, word] : faces_) {
    VertexId v = dart_tail(word.front());
    comps[uf.find(v)].faces.insert(f);
  }
  std::vector<Component> out;
  out.reserve(comps.size());
  for (auto& [root, comp] : comps) out.push_back(std::move(comp));
  return out;
}

std::optional<std::map<FaceId, int>> SurfaceComplex::orientation() const {
  // Constraint per interior edge: faces with opposite written directions must
  // share sign; same written direction forces opposite signs.
  auto uses = edge_uses();
  std::map<FaceId, int> sign;
  for (const auto& [f, word] : faces_) {
    (void)word;
    sign[f] = 0;
  }
  std::vector<FaceId> stack;
  for (const auto& [f0, word0] : faces_) {
    (void)word0;
    if (sign[f0] != 0) continue;
    sign[f0] = 1;
    stack.push_back(f0);
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      const auto& word = faces_.at(f);
      for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        EdgeId e = dart_edge(word[i]);
        const auto& u = uses.at(e);
        if (u.size() != 2) continue;
        for (const EdgeUse& other : u) {
          if (other.face == f && other.index == i) continue;
          const Dart mine = word[i];
          const Dart theirs = faces_.at(other.face)[other.index];
          // Opposite written directions -> same orientation sign.
          const int want = (dart_reversed(mine) != dart_reversed(theirs)) ? sign[f] : -sign[f];
          if (sign[other.face] == 0) {
            sign[other.face] = want;
            stack.push_back(other.face);
          } else if (sign[other.face] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return sign;
}

bool SurfaceComplex::is_orientable() const { return orientation().has_value(); }

std::vector<EdgePath> SurfaceComplex::boundary_circles() const {
  auto uses = edge_uses();
  // Free edge-ends per vertex; each boundary vertex must carry exactly two
  // (guaranteed by validate()).
  std::map<VertexId, std::vector<EdgeEnd>> free_ends;
  std::set<EdgeId> free_edges;
  for (const auto& [e, u] : uses) {
    if (u.size() != 1) continue;
    free_edges.insert(e);
    const EdgeRec& rec = edges_.at(e);
    free_ends[rec.tail].push_back(EdgeEnd{e, 0});
    free_ends[rec.head].push_back(EdgeEnd{e, 1});
  }

  auto orient = orientation();
  auto initial_dart = [&](EdgeId e) -> Dart {
    // Induced boundary orientation: the orientation-adjusted face traversal
    // direction (surface on the left).  Raw forward when non-orientable.
    if (orient) {
      const EdgeUse& u = uses.at(e).front();
      const Dart written = faces_.at(u.face)[u.index];
      const bool effective_rev = dart_reversed(written) != (orient->at(u.face) < 0);
      return make_dart(e, effective_rev);
    }
    return make_dart(e, false);
  };

  std::set<EdgeId> seen;
  std::vector<EdgePath> circles;
  for (EdgeId e0 : free_edges) {
    if (seen.count(e0)) continue;
    EdgePath path;
    Dart d = initial_dart(e0);
    while (true) {
      path.push_back(d);
      seen.insert(dart_edge(d));
      VertexId v = dart_head(d);
      const auto& ends = free_ends.at(v);
      if (ends.size() != 2) fail(ErrorKind::NotASurface, "boundary vertex with != 2 free edge-ends");
      const EdgeEnd arrived{dart_edge(d), dart_reversed(d) ? 0 : 1};
      const EdgeEnd next = (ends[0] == arrived) ? ends[1] : ends[0];
      // Leave v through the other free end: tail end -> forward dart.
      d = make_dart(next.edge, next.end == 1);
      if (dart_edge(d) == e0) break;
    }
    circles.push_back(std::move(path));
  }
  return circles;
}

std::vector<SurfaceType> SurfaceComplex::classify() const {
  auto classified = classify_components();
  std::vector<SurfaceType> out;
  out.reserve(classified.size());
  for (const auto& c : classified) out.push_back(c.type);
  return out;
}

std::vector<SurfaceComplex::ClassifiedComponent> SurfaceComplex::classify_components() const {
  if (strict_validation()) validate();
  auto comps = components();
  auto circles = boundary_circles();
  auto orient = orientation();

  std::vector<ClassifiedComponent> out;
  for (auto& comp : comps) {
    const int chi = static_cast<int>(comp.vertices.size()) - static_cast<int>(comp.edges.size()) +
                    static_cast<int>(comp.faces.size());
    int b = 0;
    for (const auto& circle : circles) {
      if (comp.edges.count(dart_edge(circle.front()))) ++b;
    }
    bool comp_orientable = true;
    if (!orient) {
      // Re-check orientability restricted to this component.
      SurfaceComplex sub;
      std::map<VertexId, VertexId> vmap;
      for (VertexId v : comp.vertices) vmap[v] = sub.add_vertex();
      std::map<EdgeId, EdgeId> emap;
      for (EdgeId e : comp.edges) emap[e] = sub.add_edge(vmap.at(edges_.at(e).tail), vmap.at(edges_.at(e).head));
      for (FaceId f : comp.faces) {
        std::vector<Dart> word;
        for (Dart d : faces_.at(f)) word.push_back(make_dart(emap.at(dart_edge(d)), dart_reversed(d)));
        sub.add_face(word);
      }
      comp_orientable = sub.is_orientable();
    }
    SurfaceType t;
    t.orientable = comp_orientable;
    t.boundary = b;
    if (comp_orientable) {
      const int twice_genus = 2 - chi - b;
      if (twice_genus < 0 || twice_genus % 2 != 0) {
        fail(ErrorKind::InvalidComplex, "inconsistent Euler characteristic for orientable component");
      }
      t.genus = twice_genus / 2;
    } else {
      t.genus = 2 - chi - b;
      if (t.genus < 1) fail(ErrorKind::InvalidComplex, "inconsistent Euler characteristic for non-orientable component");
    }
    out.push_back(ClassifiedComponent{t, std::move(comp)});
  }
  std::sort(out.begin(), out.end(), [](const ClassifiedComponent& a, const ClassifiedComponent& b) {
    auto key = [](const ClassifiedComponent& c) {
      return std::tuple(c.type.orientable ? 0 : 1, c.type.genus, c.type.boundary,
                        c.cells.vertices.empty() ? -1 : *c.cells.vertices.begin());
    };
    return key(a) < key(b);
  });
  return out;
}

std::vector<std::vector<EdgeEndRef>> SurfaceComplex::vertex_link_components(VertexId v) const {
  std::vector<EdgeEndRef> ends;
  for (const auto& [e, rec] : edges_) {
    if (rec.tail == v) ends.push_back(EdgeEndRef{e, 0});
    if (rec.head == v) ends.push_back(EdgeEndRef{e, 1});
  }
  KeyedUnionFind<EdgeEnd> uf2;
  for (const EdgeEndRef& end : ends) uf2.add(EdgeEnd{end.edge, end.end});
  for (const auto& [f, word] : faces_) {
    (void)f;
    for (size_t i = 0; i < word.size(); ++i) {
      const Dart cur = word[i];
      const Dart nxt = word[(i + 1) % word.size()];
      if (dart_head(cur) != v) continue;
      uf2.unite(dart_finish_end(cur), dart_start_end(nxt));
    }
  }
  std::map<EdgeEnd, std::vector<EdgeEndRef>> groups;
  for (const EdgeEndRef& end : ends) {
    groups[uf2.find(EdgeEnd{end.edge, end.end})].push_back(end);
  }
  std::vector<std::vector<EdgeEndRef>> out;
  for (auto& [root, group] : groups) {
    (void)root;
    out.push_back(std::move(group));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

void SurfaceComplex::validate() const {
  if (vertices_.empty() && edges_.empty() && faces_.empty()) {
    fail(ErrorKind::InvalidComplex, "empty complex");
  }
  for (const auto& [e, rec] : edges_) {
    if (!has_vertex(rec.tail) || !has_vertex(rec.head)) {
      fail(ErrorKind::InvalidComplex, "edge " + std::to_string(e) + " has missing endpoint");
    }
  }
  // Face words chain.
  for (const auto& [f, word] : faces_) {
    if (word.empty()) fail(ErrorKind::InvalidComplex, "face " + std::to_string(f) + " empty");
    for (size_t i = 0; i < word.size(); ++i) {
      if (!has_edge(dart_edge(word[i]))) fail(ErrorKind::InvalidComplex, "face references unknown edge");
      const Dart cur = word[i];
      const Dart nxt = word[(i + 1) % word.size()];
      if (dart_head(cur) != dart_tail(nxt)) {
        fail(ErrorKind::InvalidComplex, "face " + std::to_string(f) + " word does not chain");
      }
    }
  }
  // Edge use counts.
  auto uses = edge_uses();
  for (const auto& [e, u] : uses) {
    if (u.size() < 1 || u.size() > 2) {
      fail(ErrorKind::InvalidComplex,
           "edge " + std::to_string(e) + " used " + std::to_string(u.size()) + " times");
    }
  }
  // Vertex links: nodes are edge-ends, corners join them; every link must be
  // connected (single arc or circle -- degrees are forced by use counts).
  std::map<VertexId, std::vector<EdgeEnd>> ends_at;
  for (const auto& [e, rec] : edges_) {
    ends_at[rec.tail].push_back(EdgeEnd{e, 0});
    ends_at[rec.head].push_back(EdgeEnd{e, 1});
  }
  for (VertexId v : vertices_) {
    if (!ends_at.count(v) || ends_at.at(v).empty()) {
      fail(ErrorKind::NotASurface, "isolated vertex " + std::to_string(v));
    }
  }
  std::map<VertexId, KeyedUnionFind<EdgeEnd>> link;
  for (const auto& [v, ends] : ends_at) {
    for (const EdgeEnd& end : ends) link[v].add(end);
  }
  for (const auto& [f, word] : faces_) {
    (void)f;
    for (size_t i = 0; i < word.size(); ++i) {
      const Dart cur = word[i];
      const Dart nxt = word[(i + 1) % word.size()];
      const VertexId v = dart_head(cur);
      link.at(v).unite(dart_finish_end(cur), dart_start_end(nxt));
    }
  }
  for (auto& [v, uf] : link) {
    const auto& ends = ends_at.at(v);
    const EdgeEnd root = uf.find(ends.front());
    for (const EdgeEnd& end : ends) {
      if (uf.find(end) != root) {
        fail(ErrorKind::NotASurface, "branched link at vertex " + std::to_string(v));
      }
    }
  }
  // Free-end count at boundary vertices must be exactly 2 (single arc).
  for (const auto& [v, ends] : ends_at) {
    int free = 0;
    for (const EdgeEnd& end : ends) {
      if (uses.at(end.edge).size() == 1) ++free;
    }
    if (free != 0 && free != 2) {
      fail(ErrorKind::NotASurface, "vertex " + std::to_string(v) + " with " + std::to_string(free) +
                                       " free edge-ends");
    }
  }
}

// --- refinement -----------------------------------------------------------------

EdgePath SurfaceComplex::subdivide_edge(EdgeId e, int parts) {
  if (parts < 1) fail(ErrorKind::InvalidArgument, "subdivide parts < 1");
  if (parts == 1) return {make_dart(e, false)};
  const EdgeRec rec = edge(e);
  std::vector<VertexId> mids;
  for (int i = 0; i < parts - 1; ++i) mids.push_back(add_vertex());
  // First segment keeps the id.
  std::vector<EdgeId> chain{e};
  edges_[e].head = mids.front();
  for (int i = 1; i < parts; ++i) {
    VertexId a = mids[i - 1];
    VertexId b = (i == parts - 1) ? rec.head : mids[i];
    chain.push_back(add_edge(a, b));
  }
  EdgePath forward;
  for (EdgeId c : chain) forward.push_back(make_dart(c, false));
  EdgePath backward;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) backward.push_back(make_dart(*it, true));
  for (auto& [f, word] : faces_) {
    std::vector<Dart> out;
    for (Dart d : word) {
      if (dart_edge(d) != e) {
        out.push_back(d);
      } else if (!dart_reversed(d)) {
        out.insert(out.end(), forward.begin(), forward.end());
      } else {
        out.insert(out.end(), backward.begin(), backward.end());
      }
    }
    word = std::move(out);
  }
  return forward;
}

SurfaceComplex SurfaceComplex::refined() const {
  SurfaceComplex c = *this;
  std::vector<EdgeId> original;
  for (const auto& [e, rec] : c.edges_) {
    (void)rec;
    original.push_back(e);
  }
  for (EdgeId e : original) c.subdivide_edge(e, 2);
  // Stellar subdivision of each face.
  std::vector<FaceId> faces;
  for (const auto& [f, word] : c.faces_) {
    (void)word;
    faces.push_back(f);
  }
  for (FaceId f : faces) {
    const std::vector<Dart> word = c.faces_.at(f);
    const int n = static_cast<int>(word.size());
    VertexId center = c.add_vertex();
    std::vector<EdgeId> spokes(n);
    for (int i = 0; i < n; ++i) spokes[i] = c.add_edge(c.dart_tail(word[i]), center);
    c.remove_face(f);
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      c.add_face({word[i], make_dart(spokes[j], false), make_dart(spokes[i], true)});
    }
  }
  return c;
}

SurfaceComplex SurfaceComplex::restricted_to(const Component& comp) const {
  SurfaceComplex out;
  for (VertexId v : comp.vertices) out.vertices_.insert(v);
  for (EdgeId e : comp.edges) out.edges_[e] = edges_.at(e);
  for (FaceId f : comp.faces) out.faces_[f] = faces_.at(f);
  out.next_vertex_ = next_vertex_;
  out.next_edge_ = next_edge_;
  out.next_face_ = next_face_;
  return out;
}

SurfaceComplex SurfaceComplex::renumbered(int vertex_offset, int edge_offset, int face_offset,
                                          std::map<VertexId, VertexId>* vmap,
                                          std::map<EdgeId, EdgeId>* emap,
                                          std::map<FaceId, FaceId>* fmap) const {
  SurfaceComplex out;
  std::map<VertexId, VertexId> vm;
  std::map<EdgeId, EdgeId> em;
  std::map<FaceId, FaceId> fm;
  for (VertexId v : vertices_) {
    vm[v] = v + vertex_offset;
    out.vertices_.insert(v + vertex_offset);
  }
  for (const auto& [e, rec] : edges_) {
    em[e] = e + edge_offset;
    out.edges_[e + edge_offset] = EdgeRec{rec.tail + vertex_offset, rec.head + vertex_offset};
  }
  for (const auto& [f, word] : faces_) {
    fm[f] = f + face_offset;
    std::vector<Dart> w;
    for (Dart d : word) w.push_back(make_dart(dart_edge(d) + edge_offset, dart_reversed(d)));
    out.faces_[f + face_offset] = std::move(w);
  }
  out.next_vertex_ = next_vertex_ + vertex_offset;
  out.next_edge_ = next_edge_ + edge_offset;
  out.next_face_ = next_face_ + face_offset;
  if (vmap) *vmap = std::move(vm);
  if (emap) *emap = std::move(em);
  if (fmap) *fmap = std::move(fm);
  return out;
}

// --- canonical small complexes ---------------------------------------------------

SurfaceComplex make_disk(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "disk needs >= 1 boundary edge");
  SurfaceComplex c;
  std::vector<VertexId> vs(n);
  for (int i = 0; i < n; ++i) vs[i] = c.add_vertex();
  std::vector<Dart> word;
  for (int i = 0; i < n; ++i) word.push_back(make_dart(c.add_edge(vs[i], vs[(i + 1) % n]), false));
  c.add_face(word);
  return c;
}

SurfaceComplex make_sphere(int n) {
  SurfaceComplex c = make_disk(n);
  std::vector<Dart> reversed;
  const std::vector<Dart> word = c.faces().begin()->second;
  for (auto it = word.rbegin(); it != word.rend(); ++it) reversed.push_back(dart_flip(*it));
  c.add_face(reversed);
  return c;
}

SurfaceComplex make_annulus(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "annulus needs >= 1 edge per circle");
  SurfaceComplex c;
  std::vector<VertexId> us(n), ws(n);
  for (int i = 0; i < n; ++i) us[i] = c.add_vertex();
  for (int i = 0; i < n; ++i) ws[i] = c.add_vertex();
  std::vector<EdgeId> a(n), b(n), r(n);
  for (int i = 0; i < n; ++i) a[i] = c.add_edge(us[i], us[(i + 1) % n]);
  for (int i = 0; i < n; ++i) b[i] = c.add_edge(ws[i], ws[(i + 1) % n]);
  for (int i = 0; i < n; ++i) r[i] = c.add_edge(us[i], ws[i]);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    c.add_face({make_dart(a[i], false), make_dart(r[j], false), make_dart(b[i], true),
                make_dart(r[i], true)});
  }
  return c;
}

SurfaceComplex make_ladder_annulus(int n, int rings) {
  if (n < 1 || rings < 0) fail(ErrorKind::InvalidArgument, "bad ladder annulus parameters");
  SurfaceComplex c;
  const int layers = rings + 2;
  std::vector<std::vector<VertexId>> v(layers, std::vector<VertexId>(n));
  for (int r = 0; r < layers; ++r) {
    for (int i = 0; i < n; ++i) v[r][i] = c.add_vertex();
  }
  std::vector<std::vector<EdgeId>> horiz(layers, std::vector<EdgeId>(n));
  for (int r = 0; r < layers; ++r) {
    for (int i = 0; i < n; ++i) horiz[r][i] = c.add_edge(v[r][i], v[r][(i + 1) % n]);
  }
  std::vector<std::vector<EdgeId>> rung(layers - 1, std::vector<EdgeId>(n));
  for (int r = 0; r + 1 < layers; ++r) {
    for (int i = 0; i < n; ++i) rung[r][i] = c.add_edge(v[r][i], v[r + 1][i]);
  }
  for (int r = 0; r + 1 < layers; ++r) {
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      c.add_face({make_dart(horiz[r][i], false), make_dart(rung[r][j], false),
                  make_dart(horiz[r + 1][i], true), make_dart(rung[r][i], true)});
    }
  }
  return c;
}

SurfaceComplex make_torus() {
  SurfaceComplex c;
  VertexId v = c.add_vertex();
  EdgeId a = c.add_edge(v, v);
  EdgeId b = c.add_edge(v, v);
  c.add_face({make_dart(a, false), make_dart(b, false), make_dart(a, true), make_dart(b, true)});
  return c;
}

namespace {

// Builds a one-face polygon schema.  `word` entries are +/-(symbol+1); a
// symbol appearing twice becomes an interior edge, once a free edge.  Vertex
// identifications are those forced by the gluing.
SurfaceComplex from_polygon_schema(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) fail(ErrorKind::InvalidArgument, "empty schema word");
  // Corner classes.
  KeyedUnionFind<int> corners;
  for (int i = 0; i < n; ++i) corners.add(i);
  std::map<int, std::vector<std::pair<int, bool>>> occur;  // symbol -> (pos, reversed)
  for (int i = 0; i < n; ++i) {
    const int sym = std::abs(word[i]) - 1;
    occur[sym].push_back({i, word[i] < 0});
  }
  for (const auto& [sym, occ] : occur) {
    (void)sym;
    if (occ.size() == 1) continue;
    if (occ.size() != 2) fail(ErrorKind::InvalidArgument, "schema symbol used more than twice");
    auto corner_of_tail = [&](std::pair<int, bool> o) { return o.second ? (o.first + 1) % n : o.first; };
    auto corner_of_head = [&](std::pair<int, bool> o) { return o.second ? o.first : (o.first + 1) % n; };
    corners.unite(corner_of_tail(occ[0]), corner_of_tail(occ[1]));
    corners.unite(corner_of_head(occ[0]), corner_of_head(occ[1]));
  }
  SurfaceComplex c;
  std::map<int, VertexId> vertex_of_class;
  auto vertex_at = [&](int corner) {
    const int root = corners.find(corner);
    auto it = vertex_of_class.find(root);
    if (it != vertex_of_class.end()) return it->second;
    VertexId v = c.add_vertex();
    vertex_of_class[root] = v;
    return v;
  };
  std::map<int, EdgeId> edge_of_symbol;
  std::vector<Dart> w;
  for (int i = 0; i < n; ++i) {
    const int sym = std::abs(word[i]) - 1;
    const bool rev = word[i] < 0;
    auto it = edge_of_symbol.find(sym);
    EdgeId e;
    if (it == edge_of_symbol.end()) {
      const VertexId tail = vertex_at(rev ? (i + 1) % n : i);
      const VertexId head = vertex_at(rev ? i : (i + 1) % n);
      e = c.add_edge(tail, head);
      edge_of_symbol[sym] = e;
    } else {
      e = it->second;
    }
    w.push_back(make_dart(e, rev));
  }
  c.add_face(w);
  return c;
}

}  // namespace

SurfaceComplex make_orientable_surface(int genus, int boundary) {
  if (genus < 0 || boundary < 0) fail(ErrorKind::InvalidArgument, "negative genus or boundary");
  if (genus == 0 && boundary == 0) return make_sphere(3);
  if (genus == 0 && boundary == 1) return make_disk(3);
  std::vector<int> word;
  int sym = 0;
  for (int g = 0; g < genus; ++g) {
    const int a = sym++, b = sym++;
    word.push_back(a + 1);
    word.push_back(b + 1);
    word.push_back(-(a + 1));
    word.push_back(-(b + 1));
  }
  for (int i = 0; i < boundary; ++i) {
    const int x = sym++, cEdge = sym++;
    word.push_back(x + 1);
    word.push_back(cEdge + 1);
    word.push_back(-(x + 1));
  }
  SurfaceComplex c = from_polygon_schema(word);
  if (strict_validation()) c.validate();
  return c;
}

}  // namespace seifalt
