#include "doctest.h"

#include <numeric>
#include <random>

#include "seifalt/link_diagrams.hpp"

using namespace seifalt;

namespace {

// Independent oracle: component count of a braid closure is the cycle count
// of the strand permutation.
int permutation_cycles(const BraidWord& w) {
  std::vector<int> perm(w.strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : w.letters) {
    const int g = std::abs(letter) - 1;
    std::swap(perm[g], perm[g + 1]);
  }
  std::vector<bool> seen(w.strands, false);
  int cycles = 0;
  for (int i = 0; i < w.strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
    }
  }
  return cycles;
}

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

}  // namespace

TEST_CASE("empty text is the unknot code") {
  PDCode pd = parse_pd("");
  CHECK(pd.crossings.empty());
  CHECK(link_component_count(pd) == 1);
}

TEST_CASE("trefoil text parses to 3 crossings and one component") {
  PDCode pd = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CHECK(pd.crossings.size() == 3);
  CHECK(link_component_count(pd) == 1);
}

TEST_CASE("malformed arity is a syntax error") {
  try {
    parse_pd("X(1,2,3)");
    CHECK(false);
  } catch (const TopologyError& err) {
    CHECK(err.kind() == ErrorKind::SyntaxError);
  }
}

TEST_CASE("label arity errors are reported") {
  try {
    parse_pd("X(1,1,1,1)");
    CHECK(false);
  } catch (const TopologyError& err) {
    CHECK(err.kind() == ErrorKind::LabelArityError);
  }
}

TEST_CASE("parse of emit is the identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    PDCode pd = braid_to_pd(random_braid(rng));
    PDCode back = parse_pd(emit_pd(pd));
    CHECK(back == pd);
  }
  // Whitespace-only normalization.
  PDCode spaced = parse_pd("  X( 1 ,4, 2,5)  ,, X(3,6,4,1)\n X(5,2,6,3) ");
  CHECK(emit_pd(spaced) == "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
}

TEST_CASE("braid closure component counts match the permutation oracle") {
  CHECK(link_component_count(braid_to_pd(BraidWord{2, {1, 1, 1}})) == 1);
  CHECK(link_component_count(braid_to_pd(BraidWord{2, {}})) == 2);
  CHECK(link_component_count(braid_to_pd(BraidWord{3, {1, 2}})) == 1);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    BraidWord w = random_braid(rng);
    CHECK(link_component_count(braid_to_pd(w)) == permutation_cycles(w));
  }
}

TEST_CASE("braid crossing count equals letter count") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord w = random_braid(rng);
    CHECK(braid_to_pd(w).crossings.size() == w.letters.size());
  }
}

TEST_CASE("braid text round-trip") {
  BraidWord w{3, {1, -2, 1, -2}};
  BraidWord back = parse_braid(emit_braid(w));
  CHECK(back.strands == w.strands);
  CHECK(back.letters == w.letters);
  CHECK_THROWS_AS(parse_braid("3 1 2"), TopologyError);
}

TEST_CASE("pretzel diagrams") {
  PDCode trefoil = pretzel_diagram(PretzelSpec{{1, 1, 1}});
  CHECK(trefoil.crossings.size() == 3);
  CHECK(link_component_count(trefoil) == 1);

  // Sum of |k_i| = 22 crossings for the six-region example.
  PDCode big = pretzel_diagram(PretzelSpec{{1, -5, -5, -1, 5, 5}});
  CHECK(big.crossings.size() == 22);
  CHECK(link_component_count(big) == 2);

  // Even twists: the two-region chain is a two-component link; a single
  // even region closes up to one component (its two-disk surface is a disk).
  PDCode chain = pretzel_diagram(PretzelSpec{{2, 2}});
  CHECK(link_component_count(chain) == 2);
  CHECK(link_component_count(pretzel_diagram(PretzelSpec{{2}})) == 1);

  try {
    pretzel_diagram(PretzelSpec{{1, 2}});
    CHECK(false);
  } catch (const TopologyError& err) {
    CHECK(err.kind() == ErrorKind::UnorientableSpec);
  }
}

TEST_CASE("pretzel crossing count is the absolute twist sum") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    PretzelSpec spec;
    const int n = 1 + static_cast<int>(rng() % 5);
    const int parity = static_cast<int>(rng() & 1);
    int total = 0;
    for (int i = 0; i < n; ++i) {
      int k = 1 + static_cast<int>(rng() % 4);
      if (k % 2 != parity) ++k;
      if (rng() & 1) k = -k;
      spec.twists.push_back(k);
      total += std::abs(k);
    }
    CHECK(pretzel_diagram(spec).crossings.size() == static_cast<size_t>(total));
  }
}

TEST_CASE("seifert circles") {
  CHECK(seifert_circles(parse_pd("")).count == 1);
  CHECK(seifert_circles(braid_to_pd(BraidWord{2, {1, 1, 1}})).count == 2);
  CHECK(seifert_circles(braid_to_pd(BraidWord{2, {}})).count == 2);
  // Braid closures smooth to one circle per strand.
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord w = random_braid(rng);
    CHECK(seifert_circles(braid_to_pd(w)).count == w.strands);
  }
}

TEST_CASE("every arc lies on exactly one circle") {
  PDCode pd = braid_to_pd(BraidWord{3, {1, -2, 1, -2}});
  SeifertCircles sc = seifert_circles(pd);
  for (size_t label = 1; label < sc.circle_of_arc.size(); ++label) {
    CHECK(sc.circle_of_arc[label] >= 0);
    CHECK(sc.circle_of_arc[label] < sc.count);
  }
}
