#include "chordspace/song_path.h"

#include <algorithm>
#include <string>

#include "chordspace/errors.h"

namespace chordspace {

SongPath buildPath(const ChordClassSequence& seq, const CooccurrenceModel& model,
                   const Beats& boundary_beats) {
  if (boundary_beats <= Beats(0)) {
    throw Error(Errc::kParameterOutOfRange,
                "boundary beats must be positive, got " + formatBeats(boundary_beats));
  }
  std::vector<int> tokens;
  std::vector<Beats> beats;
  tokens.reserve(seq.size() + 2);
  beats.reserve(seq.size() + 2);

  tokens.push_back(ChordClass::kStartIndex);
  beats.push_back(boundary_beats);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    tokens.push_back(seq.classes[i].index());
    beats.push_back(seq.beats[i]);
  }
  tokens.push_back(ChordClass::kEndIndex);
  beats.push_back(boundary_beats);

  Beats total(0);
  for (const Beats& b : beats) total += b;
  if (total <= Beats(0)) {
    throw Error(Errc::kZeroLengthPath,
                "song '" + seq.song_id + "' has no positive duration");
  }

  SongPath path;
  path.total_beats = total;
  path.model_fingerprint = model.fingerprint;
  path.vertices.reserve(tokens.size() + 1);
  path.knots.reserve(tokens.size() + 1);

  Vec63 position{};
  Beats cumulative(0);
  path.vertices.push_back(position);
  path.knots.push_back(0.0);
  for (std::size_t m = 0; m < tokens.size(); ++m) {
    const Vec63& direction = model.embeddings[tokens[m]];
    const double scale = toDouble(beats[m]);
    for (int d = 0; d < ChordClass::kCount; ++d)
      position[d] += scale * direction[d];
    cumulative += beats[m];
    path.vertices.push_back(position);
    // Exact rational ratio, converted to double once per knot; the final
    // ratio is exactly 1/1, so the last knot is exactly 1.0.
    path.knots.push_back(toDouble(cumulative / total));
  }
  return path;
}

Vec63 evalPath(const SongPath& path, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(Errc::kParameterOutOfRange,
                "path parameter " + std::to_string(t) + " outside [0, 1]");
  }
  // First knot strictly greater than t brackets the segment; t = 1 lands on
  // the final segment.
  const auto after = std::upper_bound(path.knots.begin(), path.knots.end(), t);
  if (after == path.knots.end()) return path.vertices.back();
  const std::size_t hi = static_cast<std::size_t>(after - path.knots.begin());
  const std::size_t lo = hi - 1;

  const double span = path.knots[hi] - path.knots[lo];
  const double blend = span > 0.0 ? (t - path.knots[lo]) / span : 0.0;
  Vec63 point;
  for (int d = 0; d < ChordClass::kCount; ++d) {
    point[d] = path.vertices[lo][d] +
               blend * (path.vertices[hi][d] - path.vertices[lo][d]);
  }
  return point;
}

}  // namespace chordspace
