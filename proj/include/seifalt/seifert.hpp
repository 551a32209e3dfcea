#pragma once

// Seifert's algorithm, disk-band surfaces, Seifert matrices and the
// Alexander polynomial.

#include <map>
#include <string>
#include <vector>

#include "seifalt/link_diagrams.hpp"
#include "seifalt/surface_complex.hpp"

namespace seifalt {

struct BandSpec {
  int disk_a = -1;
  int slot_a = -1;
  int disk_b = -1;
  int slot_b = -1;
  bool flipped = false;  // orientation-reversing attachment
  int weight = 0;        // crossing sign, or half-twist count for pretzels
};

struct DiskBandSurface {
  std::vector<int> slots_per_disk;
  std::vector<BandSpec> bands;
  SurfaceComplex complex;
  // Per-disk, per-slot: the boundary edge of that slot inside `complex`.
  std::vector<std::vector<EdgeId>> slot_edges;

  enum class Provenance { None, Braid, Pretzel };
  Provenance provenance = Provenance::None;
  BraidWord braid;            // set for Provenance::Braid
  std::vector<int> pretzel;   // set for Provenance::Pretzel
};

// Raw disk-band complex builder (used by the generators below and by
// fixtures).
DiskBandSurface build_disk_band(const std::vector<int>& slots_per_disk,
                                const std::vector<BandSpec>& bands);

// Seifert's algorithm on a PD code: one disk per Seifert circle, one band
// per crossing.  chi = circles - crossings; boundary circles = link
// components.
DiskBandSurface seifert_surface(const PDCode& pd);

// The standard pretzel surface: two disks joined by n bands with k_i half
// twists.  Refused (UnorientableSpec) for mixed parities.
DiskBandSurface pretzel_surface(const PretzelSpec& spec);

// Braid-closure Seifert surface with braid provenance (same complex as
// seifert_surface(braid_to_pd(w))).
DiskBandSurface braid_surface(const BraidWord& word);

// --- algebraic shadow ---------------------------------------------------------

struct SeifertMatrix {
  std::vector<std::vector<long long>> rows;  // square
  int size() const { return static_cast<int>(rows.size()); }
};

// Linking form of a homology basis of band loops.  Computable for braid and
// pretzel provenance; NoEmbeddingData otherwise.
SeifertMatrix seifert_matrix(const DiskBandSurface& dbs);

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial constant(long long c);
  static LaurentPolynomial monomial(long long c, int exp);

  void set(int exp, long long coeff);
  long long coeff(int exp) const;
  bool is_zero() const;
  int min_exponent() const;  // 0 for the zero polynomial
  int max_exponent() const;

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  bool operator==(const LaurentPolynomial& o) const;

  // Shift to minimum exponent 0 and positive leading coefficient.
  LaurentPolynomial normalized() const;

  const std::map<int, long long>& coefficients() const { return coeffs_; }
  std::string to_string() const;

 private:
  void trim();
  std::map<int, long long> coeffs_;
};

// det(V - t V^T), normalized.
LaurentPolynomial alexander_polynomial(const SeifertMatrix& V);

enum class EnlargeType { Upper, Lower };

// S-equivalence enlargement: size grows by two, Alexander polynomial is
// unchanged.  x must have V.size() entries.
SeifertMatrix enlarge_matrix(const SeifertMatrix& V, const std::vector<long long>& x,
                             EnlargeType type);

}  // namespace seifalt
