#pragma once

#include <cstdint>
#include <vector>

#include "chordspace/beats.h"
#include "chordspace/chord_class.h"
#include "chordspace/cooccurrence.h"
#include "chordspace/vec63.h"

namespace chordspace {

/// A song as a piecewise-linear path through chord-class space. Vertex m+1
/// is vertex m plus the token's embedding scaled by its beats, starting from
/// the origin with the <START> token and closing with <END>.
///
/// knots[m] is the normalized-beat parameter of vertex m: 0 at the origin,
/// strictly increasing to 1. Knots are accumulated as exact rationals and
/// converted to double once, here.
struct SongPath {
  std::vector<Vec63> vertices;   // size = token count + 1; vertices[0] = origin
  std::vector<double> knots;     // parallel to vertices
  Beats total_beats{};           // includes the <START>/<END> pseudo-durations
  std::uint64_t model_fingerprint = 0;

  std::size_t segments() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Builds the path for a reduced, transposed sequence. <START> and <END>
/// carry no beats of their own, so they are given boundary_beats each; the
/// value must match between any two paths that are compared.
/// Throws Error{kZeroLengthPath} if the total duration is not positive.
SongPath buildPath(const ChordClassSequence& seq, const CooccurrenceModel& model,
                   const Beats& boundary_beats = Beats(1));

/// Linear interpolation along the path; t in [0, 1]
/// (Error{kParameterOutOfRange} otherwise). evalPath(p, 0) is the origin and
/// evalPath(p, 1) the final vertex.
Vec63 evalPath(const SongPath& path, double t);

}  // namespace chordspace
