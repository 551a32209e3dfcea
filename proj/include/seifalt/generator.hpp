#pragma once

// Seeded generators: random hosts, random altering surfaces, random coherent
// tube sequences with generic intersection payloads.  Everything is
// deterministic for a fixed seed.

#include <cstdint>
#include <random>
#include <vector>

#include "seifalt/alteration.hpp"
#include "seifalt/handle_surgery.hpp"
#include "seifalt/transport.hpp"

namespace seifalt {

using Rng = std::mt19937_64;

// Embedded interior cycles of bounded length, canonicalized and deduplicated.
std::vector<EdgePath> find_interior_cycles(const SurfaceComplex& c, int max_len, int max_count);

// Faces whose words contain no free edge.
std::vector<FaceId> interior_faces(const SurfaceComplex& c);

// Random connected orientable host with boundary (a Seifert surface model).
SurfaceComplex random_host(Rng& rng);

// Random altering surface for the host: a small connected orientable piece
// attached along found disjoint interior cycles.  Returns false when the
// host offers no room.
bool random_altering_surface(Rng& rng, const SurfaceComplex& host,
                             const std::vector<EdgePath>& occupied, AlteringSurface* out);

struct GeneratedScenario {
  SurfaceComplex start;
  TubeSequence seq;  // payload slots filled
  // The transport run performed while generating (identical to replaying
  // transport_sequence(start, seq); the construction uses the same step
  // functions on the same evolving state).
  TransportSequenceResult transcript;
};

// Random coherent tube sequence of at most `steps` moves with generic
// payloads, built against the evolving transported SAS so every payload is
// consistent by construction.
GeneratedScenario generate_scenario(std::uint64_t seed, int steps);

}  // namespace seifalt
