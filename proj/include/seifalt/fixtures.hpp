#pragma once

// Combinatorial transcriptions of the paper's pictorial examples: the genus
// three Seifert surface of the trivial knot with its four-member system, and
// the pretzel surface with its annular altering surface.  Both are
// best-effort encodings of figures; the checked claims are the classified
// types, the yield partitions and the Betti counts.

#include "seifalt/alteration.hpp"

namespace seifalt {

struct KobayashiFixture {
  SurfaceComplex host;  // (orientable, genus 3, 1 boundary circle)
  SAS sas;              // four mutually disjoint altering surfaces
};

// Host: a disk with three tubes.  Members: cocore disks for each tube plus
// an annulus between two parallel meridians of the third tube, so the yield
// is a disk and the alteration sheds a torus.
KobayashiFixture kobayashi_fixture();

struct PretzelEx41Fixture {
  SurfaceComplex host;            // the (1,-5,-5,-1,5,5)-pretzel surface type
  AlteringSurface member;         // an annulus
  std::vector<int> pretzel_spec;  // {1,-5,-5,-1,5,5}
};

// Host assembled from the planar piece holding the link boundary and the
// genus-1 subpretzel piece, glued along the two circles that carry the
// annulus.  Altering along the annulus frees the genus into a closed
// surface: the Seifert part drops from Betti 5 to Betti 3.
PretzelEx41Fixture pretzel_ex41_fixture();

}  // namespace seifalt
