#include "chordspace/similarity.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>

#include "chordspace/errors.h"
#include "chordspace/pipeline.h"

namespace chordspace {

namespace {

void validateParams(const MembraneParams& params) {
  if (params.samples < 2) {
    throw Error(Errc::kParameterOutOfRange,
                "membrane samples must be at least 2, got " +
                    std::to_string(params.samples));
  }
}

/// One Riemann evaluation of the membrane integral: N+1 endpoint samples,
/// each weighted dt = 1/N. The trailing sample is pinned to t = 1 so the
/// final vertices always contribute.
double sampledArea(const SongPath& f, const SongPath& g, int samples) {
  double area = 0.0;
  const double dt = 1.0 / samples;
  for (int n = 0; n <= samples; ++n) {
    const double t = n == samples ? 1.0 : n * dt;
    area += distance(evalPath(f, t), evalPath(g, t));
  }
  return area / samples;
}

double pathLength(const SongPath& path) {
  double length = 0.0;
  for (std::size_t m = 0; m + 1 < path.vertices.size(); ++m)
    length += distance(path.vertices[m], path.vertices[m + 1]);
  return length;
}

int threadCount(int requested, std::size_t jobs) {
  if (requested <= 0) {
    if (const char* env = std::getenv("CHORDSPACE_THREADS"))
      requested = std::atoi(env);
  }
  if (requested <= 0)
    requested = static_cast<int>(std::thread::hardware_concurrency());
  if (requested < 1) requested = 1;
  if (jobs < static_cast<std::size_t>(requested))
    requested = static_cast<int>(jobs);
  return requested;
}

/// Runs work(0..jobs-1) across threads. Every job writes only its own output
/// slot and its result does not depend on scheduling, so the outcome is
/// bit-identical for any thread count.
template <typename Fn>
void runParallel(std::size_t jobs, int requested_threads, Fn&& work) {
  const int threads = threadCount(requested_threads, jobs);
  if (threads <= 1) {
    for (std::size_t j = 0; j < jobs; ++j) work(j);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&work, w, threads, jobs] {
      for (std::size_t j = static_cast<std::size_t>(w); j < jobs;
           j += static_cast<std::size_t>(threads))
        work(j);
    });
  }
  for (std::thread& worker : pool) worker.join();
}

std::vector<SongPath> buildAllPaths(const std::vector<NormalizedSong>& songs,
                                    const CooccurrenceModel& model,
                                    const Beats& boundary_beats) {
  std::vector<SongPath> paths;
  paths.reserve(songs.size());
  for (const NormalizedSong& song : songs)
    paths.push_back(buildPath(song.sequence, model, boundary_beats));
  return paths;
}

}  // namespace

double membraneArea(const SongPath& f, const SongPath& g,
                    const MembraneParams& params) {
  if (f.model_fingerprint != g.model_fingerprint) {
    throw Error(Errc::kModelMismatch,
                "song paths were built against different models");
  }
  validateParams(params);

  int samples = params.samples;
  double area = sampledArea(f, g, samples);
  if (params.convergence_check) {
    constexpr int kMaxSamples = 1 << 22;
    while (samples < kMaxSamples) {
      samples *= 2;
      const double refined = sampledArea(f, g, samples);
      const bool settled =
          std::abs(refined - area) <=
          params.convergence_rel_tol * std::max(refined, 1e-12);
      area = refined;
      if (settled) break;
    }
  }
  if (params.normalize_by_mean_length) {
    const double mean_length = 0.5 * (pathLength(f) + pathLength(g));
    if (mean_length > 0.0) area /= mean_length;
  }
  return area;
}

SearchResult nearestSongs(std::string_view query_id, const Corpus& corpus,
                          const CooccurrenceModel& model,
                          const SearchOptions& options, int k) {
  if (k < 1) {
    throw Error(Errc::kParameterOutOfRange,
                "result count must be at least 1, got " + std::to_string(k));
  }
  validateParams(options.membrane);

  const std::vector<NormalizedSong> normalized = normalizeCorpus(corpus);
  std::optional<std::size_t> query_index;
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    if (normalized[i].id == query_id) {
      query_index = i;
      break;
    }
  }
  if (!query_index) {
    throw Error(Errc::kUnknownSong,
                "song '" + std::string(query_id) + "' is not in the corpus");
  }

  const std::vector<SongPath> paths =
      buildAllPaths(normalized, model, options.boundary_beats);

  std::vector<std::size_t> targets;
  targets.reserve(paths.size() - 1);
  for (std::size_t i = 0; i < paths.size(); ++i)
    if (i != *query_index) targets.push_back(i);

  std::vector<double> distances(targets.size());
  runParallel(targets.size(), options.threads, [&](std::size_t j) {
    distances[j] =
        membraneArea(paths[*query_index], paths[targets[j]], options.membrane);
  });

  std::vector<std::size_t> order(targets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (distances[a] != distances[b]) return distances[a] < distances[b];
    return normalized[targets[a]].id < normalized[targets[b]].id;
  });
  if (order.size() > static_cast<std::size_t>(k)) order.resize(k);

  SearchResult result;
  result.query_id = std::string(query_id);
  result.params = options.membrane;
  result.ranked.reserve(order.size());
  for (std::size_t j : order) {
    const NormalizedSong& song = normalized[targets[j]];
    result.ranked.push_back({song.id, song.title, distances[j]});
  }
  return result;
}

DistanceMatrix pairwiseDistances(const Corpus& corpus,
                                 const CooccurrenceModel& model,
                                 const SearchOptions& options) {
  validateParams(options.membrane);

  const std::vector<NormalizedSong> normalized = normalizeCorpus(corpus);
  const std::size_t n = normalized.size();

  DistanceMatrix matrix;
  matrix.ids.reserve(n);
  for (const NormalizedSong& song : normalized) matrix.ids.push_back(song.id);
  matrix.values.assign(n, std::vector<double>(n, 0.0));
  if (n < 2) return matrix;

  const std::vector<SongPath> paths =
      buildAllPaths(normalized, model, options.boundary_beats);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<double> distances(pairs.size());
  runParallel(pairs.size(), options.threads, [&](std::size_t p) {
    distances[p] =
        membraneArea(paths[pairs[p].first], paths[pairs[p].second], options.membrane);
  });

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    matrix.values[pairs[p].first][pairs[p].second] = distances[p];
    matrix.values[pairs[p].second][pairs[p].first] = distances[p];
  }
  return matrix;
}

}  // namespace chordspace
