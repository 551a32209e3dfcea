#include "doctest.h"

#include <random>

#include "seifalt/seifert.hpp"

using namespace seifalt;

namespace {

SurfaceType ori(int genus, int boundary) { return SurfaceType{true, genus, boundary}; }

BraidWord random_braid(std::mt19937_64& rng, int max_strands = 4, int max_len = 8) {
  BraidWord w;
  w.strands = 2 + static_cast<int>(rng() % (max_strands - 1));
  const int len = 1 + static_cast<int>(rng() % max_len);
  for (int i = 0; i < len; ++i) {
    const int g = 1 + static_cast<int>(rng() % (w.strands - 1));
    w.letters.push_back((rng() & 1) ? g : -g);
  }
  return w;
}

long long det_antisym(const SeifertMatrix& V) {
  const int n = V.size();
  std::vector<std::vector<double>> M(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = static_cast<double>(V.rows[i][j] - V.rows[j][i]);
  }
  double det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r) {
      if (std::abs(M[r][c]) > 1e-9) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    for (int r = c + 1; r < n; ++r) {
      const double f = M[r][c] / M[c][c];
      for (int j = c; j < n; ++j) M[r][j] -= f * M[c][j];
    }
  }
  return std::llround(det);
}

LaurentPolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms) p.set(e, c);
  return p;
}

}  // namespace

TEST_CASE("unknot surface is a disk") {
  DiskBandSurface s = seifert_surface(parse_pd(""));
  CHECK(s.complex.classify() == std::vector<SurfaceType>{ori(0, 1)});
}

TEST_CASE("trefoil braid surface is the genus-1 surface") {
  DiskBandSurface s = braid_surface(BraidWord{2, {1, 1, 1}});
  CHECK(s.complex.classify() == std::vector<SurfaceType>{ori(1, 1)});
  CHECK(s.complex.euler_characteristic() == -1);
}

TEST_CASE("surface bookkeeping: chi = circles - crossings, boundary = components") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    BraidWord w = random_braid(rng);
    const PDCode pd = braid_to_pd(w);
    DiskBandSurface s = seifert_surface(pd);
    const int circles = seifert_circles(pd).count;
    const int crossings = static_cast<int>(pd.crossings.size());
    CHECK(s.complex.euler_characteristic() == circles - crossings);
    CHECK(static_cast<int>(s.complex.boundary_circles().size()) == link_component_count(pd));
    CHECK(s.complex.is_orientable());
  }
}

TEST_CASE("pretzel surfaces") {
  DiskBandSurface big = pretzel_surface(PretzelSpec{{1, -5, -5, -1, 5, 5}});
  CHECK(big.complex.euler_characteristic() == -4);
  CHECK(big.complex.classify() == std::vector<SurfaceType>{ori(2, 2)});

  DiskBandSurface trefoil = pretzel_surface(PretzelSpec{{1, 1, 1}});
  CHECK(trefoil.complex.classify() == std::vector<SurfaceType>{ori(1, 1)});

  // A single even region closes to a one-component link spanned by a disk;
  // the two-region even chain is spanned by the annulus.
  DiskBandSurface single = pretzel_surface(PretzelSpec{{2}});
  CHECK(single.complex.classify() == std::vector<SurfaceType>{ori(0, 1)});
  DiskBandSurface chain = pretzel_surface(PretzelSpec{{2, 2}});
  CHECK(chain.complex.classify() == std::vector<SurfaceType>{ori(0, 2)});

  CHECK_THROWS_AS(pretzel_surface(PretzelSpec{{1, 2}}), TopologyError);
}

TEST_CASE("pretzel surface boundary count matches its diagram") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    PretzelSpec spec;
    const int n = 1 + static_cast<int>(rng() % 5);
    const int parity = static_cast<int>(rng() & 1);
    for (int i = 0; i < n; ++i) {
      int k = 1 + static_cast<int>(rng() % 4);
      if (k % 2 != parity) ++k;
      if (rng() & 1) k = -k;
      spec.twists.push_back(k);
    }
    DiskBandSurface s = pretzel_surface(spec);
    CHECK(static_cast<int>(s.complex.boundary_circles().size()) ==
          link_component_count(pretzel_diagram(spec)));
  }
}

TEST_CASE("unknot matrix and polynomial") {
  DiskBandSurface s = braid_surface(BraidWord{2, {1}});
  SeifertMatrix V = seifert_matrix(s);
  CHECK(V.size() == 0);
  CHECK(alexander_polynomial(V) == poly({{0, 1}}));
}

TEST_CASE("trefoil matrix under the pinned conventions") {
  DiskBandSurface s = braid_surface(BraidWord{2, {1, 1, 1}});
  SeifertMatrix V = seifert_matrix(s);
  REQUIRE(V.size() == 2);
  CHECK(V.rows[0][0] == -1);
  CHECK(V.rows[0][1] == 1);
  CHECK(V.rows[1][0] == 0);
  CHECK(V.rows[1][1] == -1);
  CHECK(alexander_polynomial(V) == poly({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(det_antisym(V) == 1);
}

TEST_CASE("other trefoil presentation gives the same polynomial") {
  SeifertMatrix V = seifert_matrix(braid_surface(BraidWord{3, {1, 2, 1, 2}}));
  CHECK(alexander_polynomial(V) == poly({{0, 1}, {1, -1}, {2, 1}}));
}

TEST_CASE("figure eight") {
  SeifertMatrix V = seifert_matrix(braid_surface(BraidWord{3, {1, -2, 1, -2}}));
  CHECK(std::llabs(det_antisym(V)) == 1);
  CHECK(alexander_polynomial(V) == poly({{0, 1}, {1, -3}, {2, 1}}));
}

TEST_CASE("knot braids have unimodular antisymmetrized matrices") {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 40) {
    BraidWord w = random_braid(rng);
    if (link_component_count(braid_to_pd(w)) != 1) continue;
    SeifertMatrix V = seifert_matrix(braid_surface(w));
    CHECK(std::llabs(det_antisym(V)) == 1);
    ++checked;
  }
}

TEST_CASE("knot polynomials are symmetric") {
  std::mt19937_64 rng(24);
  int checked = 0;
  while (checked < 30) {
    BraidWord w = random_braid(rng);
    if (link_component_count(braid_to_pd(w)) != 1) continue;
    LaurentPolynomial d = alexander_polynomial(seifert_matrix(braid_surface(w)));
    LaurentPolynomial reversed;
    for (const auto& [e, c] : d.coefficients()) reversed.set(-e, c);
    CHECK(reversed.normalized() == d);
    ++checked;
  }
}

TEST_CASE("pretzel matrices") {
  SeifertMatrix V = seifert_matrix(pretzel_surface(PretzelSpec{{1, 1, 1}}));
  REQUIRE(V.size() == 2);
  CHECK(alexander_polynomial(V) == poly({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(std::llabs(det_antisym(V)) == 1);
}

TEST_CASE("no provenance means no matrix") {
  DiskBandSurface s = seifert_surface(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"));
  try {
    seifert_matrix(s);
    CHECK(false);
  } catch (const TopologyError& err) {
    CHECK(err.kind() == ErrorKind::NoEmbeddingData);
  }
}

TEST_CASE("enlargement keeps the polynomial, 100 random trials") {
  std::mt19937_64 rng(25);
  SeifertMatrix base = seifert_matrix(braid_surface(BraidWord{2, {1, 1, 1}}));
  // Unknot enlargement example.
  SeifertMatrix zero;
  SeifertMatrix grown = enlarge_matrix(zero, {}, EnlargeType::Upper);
  CHECK(grown.size() == 2);
  CHECK(alexander_polynomial(grown) == poly({{0, 1}}));

  SeifertMatrix four = enlarge_matrix(base, {1, -2}, EnlargeType::Lower);
  CHECK(four.size() == 4);
  CHECK(alexander_polynomial(four) == poly({{0, 1}, {1, -1}, {2, 1}}));

  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 4);
    SeifertMatrix V;
    V.rows.assign(n, std::vector<long long>(n, 0));
    for (auto& row : V.rows) {
      for (auto& v : row) v = static_cast<long long>(rng() % 7) - 3;
    }
    std::vector<long long> x(n);
    for (auto& v : x) v = static_cast<long long>(rng() % 7) - 3;
    const EnlargeType type = (rng() & 1) ? EnlargeType::Upper : EnlargeType::Lower;
    const LaurentPolynomial before = alexander_polynomial(V);
    const LaurentPolynomial after = alexander_polynomial(enlarge_matrix(V, x, type));
    CHECK(before == after);
  }
}

TEST_CASE("double enlargement commutes with normalization") {
  SeifertMatrix V = seifert_matrix(braid_surface(BraidWord{2, {1, 1, 1}}));
  SeifertMatrix once = enlarge_matrix(V, {0, 1}, EnlargeType::Upper);
  SeifertMatrix twice = enlarge_matrix(once, {1, 0, 0, 2}, EnlargeType::Lower);
  CHECK(alexander_polynomial(twice) == alexander_polynomial(V));
}

TEST_CASE("dimension mismatch is rejected") {
  SeifertMatrix V = seifert_matrix(braid_surface(BraidWord{2, {1, 1, 1}}));
  CHECK_THROWS_AS(enlarge_matrix(V, {1}, EnlargeType::Upper), TopologyError);
}

TEST_CASE("polynomial normalization") {
  LaurentPolynomial p = poly({{-2, -2}, {0, -1}});
  LaurentPolynomial n = p.normalized();
  CHECK(n.min_exponent() == 0);
  CHECK(n.coeff(2) > 0);
  CHECK(LaurentPolynomial().normalized().is_zero());
}
