#pragma once

// Oriented link diagram inputs: PD codes, braid words, pretzel
// specifications.  Convention: X(a,b,c,d) lists the incoming under-strand
// first and proceeds counterclockwise; the unknot is the empty code.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "seifalt/errors.hpp"

namespace seifalt {

struct PDCode {
  std::vector<std::array<int, 4>> crossings;  // arc labels 1..2n, each twice
  // Crossingless unknotted split components (braid closures of trivial
  // strands).  Zero for ordinary codes; the empty code with no free loops is
  // the unknot.
  int free_loops = 0;

  bool operator==(const PDCode&) const = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +-i means generator sigma_|i| with that sign
};

struct PretzelSpec {
  std::vector<int> twists;  // nonzero entries
};

void validate_pd(const PDCode& pd);
void validate_braid(const BraidWord& word);
void validate_pretzel(const PretzelSpec& spec);

// `X(a,b,c,d)` terms separated by whitespace or commas; `U` adds a free
// loop.  Errors carry the offending position.
PDCode parse_pd(const std::string& text);
std::string emit_pd(const PDCode& pd);

// Braid text: `strands=N` header then whitespace-separated signed letters.
BraidWord parse_braid(const std::string& text);
std::string emit_braid(const BraidWord& word);

// Braid closure; crossing count equals the letter count.
PDCode braid_to_pd(const BraidWord& word);

// Diagram of the (k1,...,kn)-pretzel link with sum |ki| crossings, oriented
// so the standard two-disk surface is a Seifert surface.  UnorientableSpec
// when no orientation makes every twist region coherent (mixed parities).
PDCode pretzel_diagram(const PretzelSpec& spec);

int link_component_count(const PDCode& pd);

// Resolved strand directions: for each crossing, whether slot b carries the
// incoming over-strand (otherwise slot d does).
std::vector<bool> resolve_orientations(const PDCode& pd);

struct SeifertCircles {
  int count = 0;
  // circle index per arc label (1-based labels; index 0 unused).
  std::vector<int> circle_of_arc;
  // Per circle, the (crossing, under-flag) visits in traversal order.
  std::vector<std::vector<std::pair<int, bool>>> visits;
};

// Orientation-respecting smoothing of every crossing.
SeifertCircles seifert_circles(const PDCode& pd);

}  // namespace seifalt
