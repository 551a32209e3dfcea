#include "seifalt/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace seifalt {

DiskBandSurface build_disk_band(const std::vector<int>& slots_per_disk,
                                const std::vector<BandSpec>& bands) {
  DiskBandSurface out;
  out.slots_per_disk = slots_per_disk;
  out.bands = bands;
  SurfaceComplex c;
  out.slot_edges.resize(slots_per_disk.size());
  for (size_t d = 0; d < slots_per_disk.size(); ++d) {
    const int m = slots_per_disk[d];
    const int n_edges = std::max(2, 2 * m);
    std::vector<VertexId> vs(n_edges);
    for (auto& v : vs) v = c.add_vertex();
    std::vector<Dart> word;
    for (int i = 0; i < n_edges; ++i) {
      EdgeId e = c.add_edge(vs[i], vs[(i + 1) % n_edges]);
      word.push_back(make_dart(e, false));
      if (m > 0 && i % 2 == 0 && static_cast<int>(out.slot_edges[d].size()) < m) {
        out.slot_edges[d].push_back(e);
      }
    }
    c.add_face(word);
  }
  for (const BandSpec& b : bands) {
    if (b.disk_a < 0 || b.disk_a >= static_cast<int>(slots_per_disk.size()) || b.disk_b < 0 ||
        b.disk_b >= static_cast<int>(slots_per_disk.size())) {
      fail(ErrorKind::InvalidArgument, "band references unknown disk");
    }
    const EdgeId slot_a = out.slot_edges[b.disk_a].at(b.slot_a);
    const EdgeId slot_b = out.slot_edges[b.disk_b].at(b.slot_b);
    if (slot_a == slot_b) fail(ErrorKind::InvalidArgument, "band attached twice to one slot");
    const VertexId a1 = c.edge(slot_a).tail;
    const VertexId a2 = c.edge(slot_a).head;
    const VertexId b1 = c.edge(slot_b).tail;
    const VertexId b2 = c.edge(slot_b).head;
    if (!b.flipped) {
      const EdgeId e1 = c.add_edge(a1, b1);
      const EdgeId e2 = c.add_edge(b2, a2);
      c.add_face({make_dart(slot_a, true), make_dart(e1, false), make_dart(slot_b, false),
                  make_dart(e2, false)});
    } else {
      const EdgeId e1 = c.add_edge(a1, b2);
      const EdgeId e2 = c.add_edge(b1, a2);
      c.add_face({make_dart(slot_a, true), make_dart(e1, false), make_dart(slot_b, true),
                  make_dart(e2, false)});
    }
  }
  c.validate();
  out.complex = std::move(c);
  return out;
}

DiskBandSurface seifert_surface(const PDCode& pd) {
  validate_pd(pd);
  const SeifertCircles circles = seifert_circles(pd);
  const int n = static_cast<int>(pd.crossings.size());
  std::vector<int> slots(circles.count, 0);
  // slot index per (crossing, under-flag).
  std::map<std::pair<int, bool>, std::pair<int, int>> slot_of;  // -> (disk, slot)
  for (int cidx = 0; cidx < circles.count; ++cidx) {
    for (const auto& visit : circles.visits[cidx]) {
      slot_of[visit] = {cidx, slots[cidx]++};
    }
  }
  const auto b_in = resolve_orientations(pd);
  std::vector<BandSpec> bands;
  for (int i = 0; i < n; ++i) {
    BandSpec band;
    const auto under = slot_of.at({i, true});
    const auto over = slot_of.at({i, false});
    band.disk_a = under.first;
    band.slot_a = under.second;
    band.disk_b = over.first;
    band.slot_b = over.second;
    // Crossing bands carry a half twist: orientation-reversing attachment.
    band.flipped = true;
    band.weight = b_in[i] ? -1 : +1;  // crossing sign
    bands.push_back(band);
  }
  DiskBandSurface out = build_disk_band(slots, bands);
  out.provenance = DiskBandSurface::Provenance::None;
  return out;
}

DiskBandSurface braid_surface(const BraidWord& word) {
  DiskBandSurface out = seifert_surface(braid_to_pd(word));
  out.provenance = DiskBandSurface::Provenance::Braid;
  out.braid = word;
  return out;
}

DiskBandSurface pretzel_surface(const PretzelSpec& spec) {
  validate_pretzel(spec);
  const int parity = ((std::abs(spec.twists[0]) % 2) + 2) % 2;
  for (int k : spec.twists) {
    if (std::abs(k) % 2 != parity) {
      fail(ErrorKind::UnorientableSpec,
           "mixed twist parities: the standard pretzel surface is not orientable");
    }
  }
  const int n = static_cast<int>(spec.twists.size());
  std::vector<BandSpec> bands;
  for (int i = 0; i < n; ++i) {
    BandSpec band;
    band.disk_a = 0;
    band.slot_a = i;
    band.disk_b = 1;
    band.slot_b = i;
    band.flipped = (std::abs(spec.twists[i]) % 2 == 1);
    band.weight = spec.twists[i];
    bands.push_back(band);
  }
  DiskBandSurface out = build_disk_band({n, n}, bands);
  out.provenance = DiskBandSurface::Provenance::Pretzel;
  out.pretzel = spec.twists;
  return out;
}

// --- Seifert matrices ----------------------------------------------------------

namespace {

// Basis loops for a braid-closure surface: one loop per consecutive pair of
// occurrences of the same generator.
struct BrickLoop {
  int generator = 0;
  int first = 0;   // letter indices
  int second = 0;
  int sign_first = 0;
  int sign_second = 0;
};

std::vector<BrickLoop> brick_loops(const BraidWord& word) {
  std::vector<BrickLoop> loops;
  std::map<int, std::pair<int, int>> last;  // generator -> (letter index, sign)
  for (int t = 0; t < static_cast<int>(word.letters.size()); ++t) {
    const int g = std::abs(word.letters[t]);
    const int s = word.letters[t] > 0 ? +1 : -1;
    auto it = last.find(g);
    if (it != last.end()) {
      loops.push_back(BrickLoop{g, it->second.first, t, it->second.second, s});
    }
    last[g] = {t, s};
  }
  std::sort(loops.begin(), loops.end(), [](const BrickLoop& a, const BrickLoop& b) {
    return std::tie(a.generator, a.first) < std::tie(b.generator, b.first);
  });
  return loops;
}

SeifertMatrix braid_seifert_matrix(const BraidWord& word) {
  const auto loops = brick_loops(word);
  const int n = static_cast<int>(loops.size());
  SeifertMatrix V;
  V.rows.assign(n, std::vector<long long>(n, 0));
  for (int p = 0; p < n; ++p) {
    V.rows[p][p] = -(loops[p].sign_first + loops[p].sign_second) / 2;
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      const BrickLoop& P = loops[p];
      const BrickLoop& Q = loops[q];
      if (P.generator == Q.generator) {
        // Consecutive pairs sharing the middle band.
        if (P.second == Q.first) {
          if (P.sign_second > 0) {
            V.rows[p][q] = 1;
          } else {
            V.rows[q][p] = -1;
          }
        }
        continue;
      }
      if (std::abs(P.generator - Q.generator) != 1) continue;
      // Adjacent generators: linked when interleaved.
      if (P.first < Q.first && Q.first < P.second && P.second < Q.second) {
        // P opens first.  Table pinned by the torus and figure-eight checks.
        if (P.generator < Q.generator) {
          V.rows[p][q] = -1;
        } else {
          V.rows[q][p] = 1;
        }
      }
    }
  }
  return V;
}

SeifertMatrix pretzel_seifert_matrix(const std::vector<int>& twists) {
  // Basis: loop i through bands i and i+1 (0-based, i = 0..n-2).
  // lk(x_i, x_i+) = (k_i + k_{i+1}) / 2; adjacent loops share band i+1 with
  // the off-diagonal split (k+1)/2 vs (k-1)/2 (integer halves for odd k; for
  // even twists both halves are k/2).
  const int n = static_cast<int>(twists.size());
  const int rank = n - 1;
  SeifertMatrix V;
  V.rows.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    V.rows[i][i] = (twists[i] + twists[i + 1]) / 2;
    if ((twists[i] + twists[i + 1]) % 2 != 0) {
      fail(ErrorKind::InvalidComplex, "pretzel matrix needs matching parities");
    }
  }
  for (int i = 0; i + 1 < rank; ++i) {
    const int k = twists[i + 1];
    if (std::abs(k) % 2 == 1) {
      V.rows[i][i + 1] = (k + 1) / 2;
      V.rows[i + 1][i] = (k - 1) / 2;
    } else {
      V.rows[i][i + 1] = k / 2;
      V.rows[i + 1][i] = k / 2;
    }
  }
  return V;
}

}  // namespace

SeifertMatrix seifert_matrix(const DiskBandSurface& dbs) {
  switch (dbs.provenance) {
    case DiskBandSurface::Provenance::Braid:
      return braid_seifert_matrix(dbs.braid);
    case DiskBandSurface::Provenance::Pretzel:
      return pretzel_seifert_matrix(dbs.pretzel);
    case DiskBandSurface::Provenance::None:
      break;
  }
  fail(ErrorKind::NoEmbeddingData, "no diagram provenance for the Seifert matrix");
}

// --- Laurent polynomials ---------------------------------------------------------

LaurentPolynomial LaurentPolynomial::constant(long long c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(long long c, int exp) {
  LaurentPolynomial p;
  p.set(exp, c);
  return p;
}

void LaurentPolynomial::set(int exp, long long coeff) {
  if (coeff == 0) {
    coeffs_.erase(exp);
  } else {
    coeffs_[exp] = coeff;
  }
}

long long LaurentPolynomial::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? 0 : it->second;
}

bool LaurentPolynomial::is_zero() const { return coeffs_.empty(); }

int LaurentPolynomial::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

int LaurentPolynomial::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

void LaurentPolynomial::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.coeffs_) out.coeffs_[e] += c;
  out.trim();
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.coeffs_) out.coeffs_[e] -= c;
  out.trim();
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : o.coeffs_) {
      out.coeffs_[e1 + e2] += c1 * c2;
    }
  }
  out.trim();
  return out;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
  return coeffs_ == o.coeffs_;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (coeffs_.empty()) return {};
  LaurentPolynomial out;
  const int shift = -min_exponent();
  for (const auto& [e, c] : coeffs_) out.coeffs_[e + shift] = c;
  if (out.coeffs_.rbegin()->second < 0) {
    for (auto& [e, c] : out.coeffs_) c = -c;
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    const long long a = std::llabs(c);
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPolynomial alexander_polynomial(const SeifertMatrix& V) {
  const int n = V.size();
  if (n == 0) return LaurentPolynomial::constant(1).normalized();
  // det(V - t V^T) by subset dynamic programming over columns.
  std::vector<std::vector<LaurentPolynomial>> entries(n, std::vector<LaurentPolynomial>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LaurentPolynomial p;
      p.set(0, V.rows[i][j]);
      p.set(1, p.coeff(1) - V.rows[j][i]);
      entries[i][j] = p;
    }
  }
  std::vector<LaurentPolynomial> dp(1 << n);
  dp[0] = LaurentPolynomial::constant(1);
  for (int mask = 1; mask < (1 << n); ++mask) {
    const int row = __builtin_popcount(mask) - 1;
    LaurentPolynomial acc;
    int sign = 1;
    for (int col = 0; col < n; ++col) {
      if (!(mask & (1 << col))) continue;
      const LaurentPolynomial term = entries[row][col] * dp[mask ^ (1 << col)];
      acc = (sign > 0) ? acc + term : acc - term;
      sign = -sign;
    }
    dp[mask] = acc;
  }
  return dp[(1 << n) - 1].normalized();
}

SeifertMatrix enlarge_matrix(const SeifertMatrix& V, const std::vector<long long>& x,
                             EnlargeType type) {
  const int n = V.size();
  if (static_cast<int>(x.size()) != n) fail(ErrorKind::DimensionMismatch, "enlargement vector size");
  SeifertMatrix out;
  out.rows.assign(n + 2, std::vector<long long>(n + 2, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.rows[i][j] = V.rows[i][j];
  }
  if (type == EnlargeType::Upper) {
    // [ V x 0 ; 0 0 1 ; 0 0 0 ]
    for (int i = 0; i < n; ++i) out.rows[i][n] = x[i];
    out.rows[n][n + 1] = 1;
  } else {
    // [ V 0 0 ; x 0 0 ; 0 1 0 ]
    for (int j = 0; j < n; ++j) out.rows[n][j] = x[j];
    out.rows[n + 1][n] = 1;
  }
  return out;
}

}  // namespace seifalt
