#pragma once

// SAS transport across coherent handle moves: given a SAS for T_j and a move
// producing T_{j+1}, constructs a SAS for T_{j+1} yielding the same Seifert
// surface.  Iterating along a tube sequence turns tube equivalence into a
// single SAS on the final surface.

#include <string>
#include <vector>

#include "seifalt/alteration.hpp"
#include "seifalt/handle_surgery.hpp"

namespace seifalt {

struct PieceInventory {
  int annuli_a = 0;            // wall components closing into annuli
  int bands_b = 0;             // wall components ending on push-off sheets
  int annuli_c = 0;            // 2m trace annuli
  int pushoff_components = 0;  // connected pieces of the cut push-off sheets
  int midpoint_disks = 0;      // 1-handle case: k+1

  bool operator==(const PieceInventory&) const = default;
};

// A / B component count from the abstract cyclic structure of a config;
// independent of any host surface.  Also validates mark consistency and the
// non-crossing condition.
PieceInventory chord_circle_inventory(const ChordCircleConfig& cfg);

struct TransportReport {
  std::string move_kind;
  int input_members = 0;
  int output_members = 0;
  PieceInventory inventory;
  std::vector<SurfaceType> seifert_before;  // yields(T_j, F_j)
  std::vector<SurfaceType> seifert_after;   // yields(T_{j+1}, F_{j+1})
  bool yields_equal = false;                // computed, never assumed
};

struct TransportStep {
  SurfaceComplex surface;  // T_{j+1}
  SAS sas;                 // F_{j+1}
  TransportReport report;
};

// 1-handle case: pierced members lose the interiors of their pierced faces
// (re-attached along puncture-level meridians of the new tube) and k+1 disk
// members cap the midpoint levels.
TransportStep transport_one_handle(const SurfaceComplex& host, const SAS& sas,
                                   const OneHandle& move, const OneHandleIntersections& ix,
                                   const std::vector<SurfaceType>* seifert_before_hint = nullptr);

// 2-handle case: meeting members are replaced by their two push-off sheets
// cut along their traces, joined through wall bands, plus the wall annuli A
// and the trace annuli C.
TransportStep transport_two_handle(const SurfaceComplex& host, const SAS& sas,
                                   const TwoHandle& move, const ChordCircleConfig& cfg,
                                   const std::vector<SurfaceType>* seifert_before_hint = nullptr);

// The remark's smaller SAS for the single-annulus-intersection case
// (k = l = 0, m = 1, one meeting member): the member is cut along its trace
// and re-attached at the central level, plus the two trace annuli.
TransportStep reduce_annulus_case(const SurfaceComplex& host, const SAS& sas,
                                  const TwoHandle& move, const ChordCircleConfig& cfg,
                                  const std::vector<SurfaceType>* seifert_before_hint = nullptr);

struct TransportSequenceResult {
  std::vector<SurfaceComplex> surfaces;  // T_0 .. T_N
  std::vector<SAS> systems;              // F_0 .. F_N
  std::vector<TransportReport> reports;  // one per move
  // Seifert-part type multiset of yields(T_j, F_j) for every j.
  std::vector<std::vector<SurfaceType>> seifert_trace;
};

// Runs the induction along a tube sequence starting from the empty SAS.
// Moves without payloads are treated as missing every member (empty
// intersection pattern).
TransportSequenceResult transport_sequence(const SurfaceComplex& start, const TubeSequence& seq);

// Greedy per-member orientation fix: flips attachment cycle directions (and
// signs, keeping the side assignment) until every member alters coherently
// on its own.  Yield types are unchanged.  When `only` is non-empty, members
// not listed are taken as already coherent and passed through.
SAS resolve_sas_orientations(const SurfaceComplex& host, const SAS& sas,
                             const std::vector<int>& only = {});

}  // namespace seifalt
