#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chordspace/beats.h"
#include "chordspace/cooccurrence.h"
#include "chordspace/song.h"
#include "chordspace/song_path.h"

namespace chordspace {

/// Quadrature settings for the membrane-area integral.
struct MembraneParams {
  int samples = 1024;      // N >= 2; dt = 1/N
  bool convergence_check = false;  // double N until the area settles
  double convergence_rel_tol = 1e-3;
  bool normalize_by_mean_length = false;  // divide by mean path length
};

/// The area of the membrane stretched between two song paths:
///   sum_{n=0}^{N} ||f(n dt) - g(n dt)|| dt,  dt = 1/N,
/// evaluated on the normalized-beat parameterization. Exactly 0 for paths
/// with identical vertices and knots. With convergence_check set, N doubles
/// until the relative change drops below convergence_rel_tol.
/// Throws Error{kModelMismatch} when the paths were built against different
/// models.
double membraneArea(const SongPath& f, const SongPath& g,
                    const MembraneParams& params = {});

struct RankedSong {
  std::string song_id;
  std::string title;
  double distance;
};

struct SearchResult {
  std::string query_id;
  std::vector<RankedSong> ranked;  // ascending distance; query excluded
  MembraneParams params;
};

struct SearchOptions {
  MembraneParams membrane;
  Beats boundary_beats{1};
  // 0 = take CHORDSPACE_THREADS from the environment, else one per hardware
  // thread; always capped by the number of jobs.
  int threads = 0;
};

/// Ranks every other song in the corpus by membrane area against the query,
/// smallest first, ties broken by song id. All songs go through the shared
/// reduce/estimate/transpose pipeline. Distance evaluations may run in
/// parallel; results are identical regardless of thread count.
/// Throws Error{kUnknownSong} when query_id is not in the corpus.
SearchResult nearestSongs(std::string_view query_id, const Corpus& corpus,
                          const CooccurrenceModel& model,
                          const SearchOptions& options, int k);

struct DistanceMatrix {
  std::vector<std::string> ids;              // corpus order
  std::vector<std::vector<double>> values;   // symmetric, zero diagonal
};

DistanceMatrix pairwiseDistances(const Corpus& corpus, const CooccurrenceModel& model,
                                 const SearchOptions& options);

}  // namespace chordspace
