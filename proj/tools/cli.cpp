/**
 * @file cli.cpp
 * @brief Subcommand front end for the chordspace library.
 *
 * One binary, nine subcommands: stats, estimate-keys, roman, build-model,
 * nearest-class, distance, compare, search, pairwise. Everything is written
 * to the supplied streams so tests can drive the tool in-process.
 */

#include "cli.h"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "chordspace/chordspace.h"

namespace chordspace::cli {

namespace {

constexpr const char* kFlatSign = "♭";

std::string fixedPoint(double value, int places) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(places) << value;
  return out.str();
}

/// Column width of a cell as seen in a terminal; the flat sign is three
/// bytes but one glyph.
std::size_t displayWidth(const std::string& text) {
  std::size_t width = text.size();
  for (std::size_t pos = text.find(kFlatSign); pos != std::string::npos;
       pos = text.find(kFlatSign, pos + 1))
    width -= 2;
  return width;
}

std::string padded(std::string text, std::size_t width) {
  const std::size_t current = displayWidth(text);
  if (current < width) text.append(width - current, ' ');
  return text;
}

/// "n" or "n/d" as an exact beat count.
Beats parseBeatsArg(const std::string& text) {
  std::int64_t num = 0;
  std::int64_t den = 1;
  char slash = 0;
  std::istringstream in(text);
  if (!(in >> num)) {
    throw Error(Errc::kParameterOutOfRange, "invalid beat count '" + text + "'");
  }
  if (in >> slash) {
    if (slash != '/' || !(in >> den)) {
      throw Error(Errc::kParameterOutOfRange,
                  "invalid beat count '" + text + "'");
    }
  }
  if (!in.eof() || num <= 0 || den <= 0) {
    throw Error(Errc::kParameterOutOfRange,
                "beat count must be a positive rational, got '" + text + "'");
  }
  return Beats(num, den);
}

std::string validateBeatsArg(const std::string& text) {
  try {
    parseBeatsArg(text);
  } catch (const Error& error) {
    return error.what();
  }
  return {};
}

std::string validateClassName(const std::string& name) {
  if (!classFromName(name))
    return "unknown chord class name '" + name + "'";
  return {};
}

/// Distance labels in circle-of-fifths style: "2b", "0", "1#".
std::string fifthsLabel(int distance) {
  return keySignatureName(KeySignature{distance});
}

/// Options shared by the path-metric subcommands.
struct MetricArgs {
  std::string corpus_path;
  std::string model_path;
  int samples = 1024;
  int threads = 0;
  std::string boundary_beats = "1";
  bool normalize = false;
  bool convergence = false;

  void attach(CLI::App* sub, bool with_threads) {
    sub->add_option("corpus", corpus_path, "corpus JSONL file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--model", model_path,
                    "model file from build-model; omit to build in memory")
        ->check(CLI::ExistingFile);
    sub->add_option("--samples", samples, "membrane quadrature sample count")
        ->check(CLI::Range(2, 1 << 22));
    sub->add_option("--boundary-beats", boundary_beats,
                    "pseudo-duration of <START>/<END>, e.g. 1 or 1/2")
        ->check(validateBeatsArg);
    sub->add_flag("--normalize", normalize,
                  "divide areas by the mean path length");
    sub->add_flag("--convergence", convergence,
                  "double the sample count until the area settles");
    if (with_threads) {
      sub->add_option("--threads", threads,
                      "worker threads; 0 = CHORDSPACE_THREADS or all cores")
          ->check(CLI::Range(0, 4096));
    }
  }

  SearchOptions searchOptions() const {
    SearchOptions options;
    options.membrane.samples = samples;
    options.membrane.convergence_check = convergence;
    options.membrane.normalize_by_mean_length = normalize;
    options.boundary_beats = parseBeatsArg(boundary_beats);
    options.threads = threads;
    return options;
  }

  CooccurrenceModel loadOrBuild(const Corpus& corpus) const {
    if (!model_path.empty()) return loadModel(model_path);
    return buildModel(corpus);
  }
};

// ---------------------------------------------------------------------------
// stats

void runStats(const std::string& corpus_path, bool csv, std::ostream& out) {
  const Corpus corpus = loadCorpus(corpus_path);
  const CategoryHistogram histogram = corpusStats(corpus);

  if (csv) {
    out << "category,count,percent\n";
    for (int c = 0; c < kTable1CategoryCount; ++c) {
      const auto category = static_cast<Table1Category>(c);
      out << categoryName(category) << ',' << histogram.counts[c] << ','
          << fixedPoint(histogram.percentage(category), 3) << '\n';
    }
    return;
  }

  out << padded("category", 22) << std::setw(8) << "count" << std::setw(10)
      << "percent" << '\n';
  for (int c = 0; c < kTable1CategoryCount; ++c) {
    const auto category = static_cast<Table1Category>(c);
    out << padded(categoryName(category), 22) << std::setw(8)
        << histogram.counts[c] << std::setw(10)
        << fixedPoint(histogram.percentage(category), 3) << '\n';
  }
  out << padded("total", 22) << std::setw(8) << histogram.total << std::setw(10)
      << (histogram.total ? "100.000" : "0.000") << '\n';
}

// ---------------------------------------------------------------------------
// estimate-keys

struct KeyRow {
  std::string id;
  std::string estimate = "-";
  std::string declared = "-";
  std::string distance = "-";
  bool ambiguous = false;
};

void runEstimateKeys(const std::string& corpus_path, const std::string& format,
                     std::ostream& out) {
  const Corpus corpus = loadCorpus(corpus_path);

  std::vector<KeyRow> rows;
  std::map<int, std::size_t> histogram;
  std::size_t ambiguous_count = 0;
  rows.reserve(corpus.songs.size());

  for (const Song& song : corpus.songs) {
    KeyRow row;
    row.id = song.id;
    if (song.declared_key) row.declared = keySignatureName(*song.declared_key);

    const ChordClassSequence seq = reduceSong(song.events, song.id);
    std::optional<KeyEstimate> estimate;
    try {
      estimate = estimateKey(seq);
    } catch (const Error& error) {
      if (error.code() != Errc::kNoTonalContent) throw;
    }

    if (!estimate) {
      row.ambiguous = true;
      ++ambiguous_count;
    } else if (estimate->ambiguous) {
      row.ambiguous = true;
      ++ambiguous_count;
      row.estimate = keySignatureName(resolveKey(*estimate, song.declared_key));
    } else {
      const KeySignature winner = estimate->winners.front();
      row.estimate = keySignatureName(winner);
      if (song.declared_key) {
        const int steps = fifthsDistance(winner, *song.declared_key);
        row.distance = fifthsLabel(steps);
        ++histogram[steps];
      }
    }
    rows.push_back(std::move(row));
  }

  if (format == "csv") {
    out << "song,estimate,declared,distance,ambiguous\n";
    for (const KeyRow& row : rows) {
      out << row.id << ',' << row.estimate << ',' << row.declared << ','
          << row.distance << ',' << (row.ambiguous ? "yes" : "no") << '\n';
    }
    return;
  }

  std::size_t id_width = 4;
  for (const KeyRow& row : rows) id_width = std::max(id_width, row.id.size());
  out << padded("song", id_width) << "  " << padded("estimate", 8) << "  "
      << padded("declared", 8) << "  " << padded("distance", 8) << "  "
      << "ambiguous" << '\n';
  for (const KeyRow& row : rows) {
    out << padded(row.id, id_width) << "  " << padded(row.estimate, 8) << "  "
        << padded(row.declared, 8) << "  " << padded(row.distance, 8) << "  "
        << (row.ambiguous ? "yes" : "no") << '\n';
  }

  out << '\n' << "distance histogram (unambiguous songs with a declared key):\n";
  for (const auto& [steps, count] : histogram) {
    out << "  " << padded(fifthsLabel(steps), 4) << count << '\n';
  }
  out << "ambiguous: " << ambiguous_count << " of " << rows.size();
  if (!rows.empty()) {
    out << " ("
        << fixedPoint(100.0 * static_cast<double>(ambiguous_count) /
                          static_cast<double>(rows.size()),
                      1)
        << "%)";
  }
  out << '\n';
}

// ---------------------------------------------------------------------------
// roman / compare

/// One string per measure: the numerals of every class whose onset falls in
/// that measure. A chord held across a barline is shown once, jazz-grid
/// style.
std::vector<std::string> measureGrid(const NormalizedSong& song) {
  std::vector<std::vector<std::string>> cells;
  Beats onset(0);
  for (std::size_t i = 0; i < song.sequence.size(); ++i) {
    const Beats position = onset / Beats(song.beats_per_measure);
    const auto measure =
        static_cast<std::size_t>(position.numerator() / position.denominator());
    if (cells.size() <= measure) cells.resize(measure + 1);
    cells[measure].push_back(className(song.sequence.classes[i]));
    onset += song.sequence.beats[i];
  }

  std::vector<std::string> grid;
  grid.reserve(cells.size());
  for (const auto& names : cells) {
    std::string text;
    for (const std::string& name : names) {
      if (!text.empty()) text += ' ';
      text += name;
    }
    grid.push_back(std::move(text));
  }
  return grid;
}

const Song& findSongOrThrow(const Corpus& corpus, const std::string& id) {
  const Song* song = corpus.findSong(id);
  if (!song)
    throw Error(Errc::kUnknownSong, "song '" + id + "' is not in the corpus");
  return *song;
}

void runRoman(const std::string& corpus_path, const std::string& song_id,
              std::ostream& out) {
  const Corpus corpus = loadCorpus(corpus_path);
  const NormalizedSong song = normalizeSong(findSongOrThrow(corpus, song_id));

  out << song.title << " (" << song.id << "), key " << keySignatureName(song.key);
  if (song.ambiguous) out << " (ambiguous)";
  out << '\n';

  const std::vector<std::string> grid = measureGrid(song);
  std::size_t width = 1;
  for (const std::string& cell : grid)
    width = std::max(width, displayWidth(cell));

  for (std::size_t m = 0; m < grid.size(); m += 4) {
    out << '|';
    for (std::size_t c = m; c < std::min(m + 4, grid.size()); ++c)
      out << ' ' << padded(grid[c], width) << " |";
    out << '\n';
  }
}

void runCompare(const std::string& corpus_path, const std::string& id_a,
                const std::string& id_b, std::ostream& out) {
  const Corpus corpus = loadCorpus(corpus_path);
  const NormalizedSong song_a = normalizeSong(findSongOrThrow(corpus, id_a));
  const NormalizedSong song_b = normalizeSong(findSongOrThrow(corpus, id_b));

  const std::vector<std::string> grid_a = measureGrid(song_a);
  const std::vector<std::string> grid_b = measureGrid(song_b);
  const std::size_t measures = std::max(grid_a.size(), grid_b.size());

  std::size_t width_a = std::max<std::size_t>(displayWidth(song_a.id), 1);
  std::size_t width_b = std::max<std::size_t>(displayWidth(song_b.id), 1);
  for (const std::string& cell : grid_a)
    width_a = std::max(width_a, displayWidth(cell));
  for (const std::string& cell : grid_b)
    width_b = std::max(width_b, displayWidth(cell));

  out << song_a.title << " (" << song_a.id << ") vs " << song_b.title << " ("
      << song_b.id << ")\n";
  out << padded("measure", 8) << padded(song_a.id, width_a + 2)
      << padded(song_b.id, width_b + 2) << '\n';

  std::size_t differing = 0;
  for (std::size_t m = 0; m < measures; ++m) {
    const std::string cell_a = m < grid_a.size() ? grid_a[m] : std::string();
    const std::string cell_b = m < grid_b.size() ? grid_b[m] : std::string();
    const bool differs = cell_a != cell_b;
    if (differs) ++differing;
    out << padded(std::to_string(m + 1), 8) << padded(cell_a, width_a + 2)
        << padded(cell_b, width_b + 2) << (differs ? "*" : "") << '\n';
  }
  out << differing << " of " << measures << " measures differ\n";
}

// ---------------------------------------------------------------------------
// build-model / nearest-class

void runBuildModel(const std::string& corpus_path, const std::string& out_path,
                   std::ostream& out) {
  const Corpus corpus = loadCorpus(corpus_path);
  const CooccurrenceModel model = buildModel(corpus);
  saveModel(model, out_path);

  std::uint64_t mass = 0;
  for (const auto& row : model.counts)
    for (std::uint64_t cell : row) mass += cell;
  out << "model written to '" << out_path << "': " << model.corpus_size
      << " songs, " << mass / 2 << " adjacencies\n";
}

void runNearestClass(const std::string& model_path, const std::string& name,
                     int k, std::ostream& out) {
  const CooccurrenceModel model = loadModel(model_path);
  const ChordClass query = *classFromName(name);

  const std::vector<ClassSimilarity> ranked = nearestClasses(model, query, k);
  out << padded("class", 8) << "cosine\n";
  // Ascending listing, query last, as in the similarity tables.
  for (auto it = ranked.rbegin(); it != ranked.rend(); ++it) {
    out << padded(className(it->chord_class), 8)
        << fixedPoint(it->similarity, 3) << '\n';
  }
}

// ---------------------------------------------------------------------------
// distance / search / pairwise

void runDistance(const MetricArgs& args, const std::string& id_a,
                 const std::string& id_b, std::ostream& out) {
  const Corpus corpus = loadCorpus(args.corpus_path);
  const CooccurrenceModel model = args.loadOrBuild(corpus);
  const SearchOptions options = args.searchOptions();

  const NormalizedSong song_a = normalizeSong(findSongOrThrow(corpus, id_a));
  const NormalizedSong song_b = normalizeSong(findSongOrThrow(corpus, id_b));
  const SongPath path_a = buildPath(song_a.sequence, model, options.boundary_beats);
  const SongPath path_b = buildPath(song_b.sequence, model, options.boundary_beats);

  out << std::setprecision(12) << membraneArea(path_a, path_b, options.membrane)
      << '\n';
}

void runSearch(const MetricArgs& args, const std::string& song_id, int k,
               std::ostream& out) {
  const Corpus corpus = loadCorpus(args.corpus_path);
  const CooccurrenceModel model = args.loadOrBuild(corpus);
  const SearchResult result =
      nearestSongs(song_id, corpus, model, args.searchOptions(), k);

  std::size_t id_width = 2;
  for (const RankedSong& song : result.ranked)
    id_width = std::max(id_width, song.song_id.size());

  out << padded("rank", 6) << padded("distance", 12) << padded("id", id_width + 2)
      << "title\n";
  for (std::size_t rank = 0; rank < result.ranked.size(); ++rank) {
    const RankedSong& song = result.ranked[rank];
    out << padded(std::to_string(rank + 1), 6)
        << padded(fixedPoint(song.distance, 6), 12)
        << padded(song.song_id, id_width + 2) << song.title << '\n';
  }
}

void runPairwise(const MetricArgs& args, bool csv, std::ostream& out) {
  const Corpus corpus = loadCorpus(args.corpus_path);
  const CooccurrenceModel model = args.loadOrBuild(corpus);
  const DistanceMatrix matrix =
      pairwiseDistances(corpus, model, args.searchOptions());

  if (csv) {
    out << "id";
    for (const std::string& id : matrix.ids) out << ',' << id;
    out << '\n';
    for (std::size_t i = 0; i < matrix.ids.size(); ++i) {
      out << matrix.ids[i];
      for (double value : matrix.values[i])
        out << ',' << std::setprecision(10) << value;
      out << '\n';
    }
    return;
  }

  std::size_t id_width = 2;
  for (const std::string& id : matrix.ids)
    id_width = std::max(id_width, id.size());
  const std::size_t cell_width = std::max<std::size_t>(id_width, 8);

  out << padded("", id_width + 2);
  for (const std::string& id : matrix.ids) out << padded(id, cell_width + 2);
  out << '\n';
  for (std::size_t i = 0; i < matrix.ids.size(); ++i) {
    out << padded(matrix.ids[i], id_width + 2);
    for (double value : matrix.values[i])
      out << padded(fixedPoint(value, 4), cell_width + 2);
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"chord-progression analysis and contrafact search"};
  app.require_subcommand(1);

  // stats
  std::string stats_corpus;
  bool stats_csv = false;
  CLI::App* stats = app.add_subcommand("stats", "corpus chord-category histogram");
  stats->add_option("corpus", stats_corpus, "corpus JSONL file")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_flag("--csv", stats_csv, "emit CSV instead of aligned text");
  stats->callback([&] { runStats(stats_corpus, stats_csv, out); });

  // estimate-keys
  std::string keys_corpus;
  std::string keys_format = "text";
  CLI::App* keys =
      app.add_subcommand("estimate-keys", "per-song key signature estimation");
  keys->add_option("corpus", keys_corpus, "corpus JSONL file")
      ->required()
      ->check(CLI::ExistingFile);
  keys->add_option("--report", keys_format, "report format: text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  keys->callback([&] { runEstimateKeys(keys_corpus, keys_format, out); });

  // roman
  std::string roman_corpus;
  std::string roman_song;
  CLI::App* roman =
      app.add_subcommand("roman", "measure grid in roman-numeral notation");
  roman->add_option("corpus", roman_corpus, "corpus JSONL file")
      ->required()
      ->check(CLI::ExistingFile);
  roman->add_option("--song", roman_song, "song id")->required();
  roman->callback([&] { runRoman(roman_corpus, roman_song, out); });

  // build-model
  std::string build_corpus;
  std::string build_out;
  CLI::App* build =
      app.add_subcommand("build-model", "build and save the co-occurrence model");
  build->add_option("corpus", build_corpus, "corpus JSONL file")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("-o,--output", build_out, "model file to write")->required();
  build->callback([&] { runBuildModel(build_corpus, build_out, out); });

  // nearest-class
  std::string nc_model;
  std::string nc_class;
  int nc_k = 5;
  CLI::App* nearest =
      app.add_subcommand("nearest-class", "classes closest in cosine similarity");
  nearest->add_option("model", nc_model, "model file from build-model")
      ->required()
      ->check(CLI::ExistingFile);
  nearest->add_option("--class", nc_class, "chord class name, e.g. bii7 or iim")
      ->required()
      ->check(validateClassName);
  nearest->add_option("-k,--top", nc_k, "number of classes to list")
      ->check(CLI::Range(1, 63));
  nearest->callback([&] { runNearestClass(nc_model, nc_class, nc_k, out); });

  // distance
  MetricArgs distance_args;
  std::string distance_a, distance_b;
  CLI::App* distance =
      app.add_subcommand("distance", "membrane area between two songs");
  distance_args.attach(distance, /*with_threads=*/false);
  distance->add_option("--song-a", distance_a, "first song id")->required();
  distance->add_option("--song-b", distance_b, "second song id")->required();
  distance->callback(
      [&] { runDistance(distance_args, distance_a, distance_b, out); });

  // compare
  std::string compare_corpus;
  std::string compare_a, compare_b;
  CLI::App* compare =
      app.add_subcommand("compare", "side-by-side roman grids of two songs");
  compare->add_option("corpus", compare_corpus, "corpus JSONL file")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--song-a", compare_a, "first song id")->required();
  compare->add_option("--song-b", compare_b, "second song id")->required();
  compare->callback(
      [&] { runCompare(compare_corpus, compare_a, compare_b, out); });

  // search
  MetricArgs search_args;
  std::string search_song;
  int search_k = 10;
  CLI::App* search =
      app.add_subcommand("search", "rank songs by membrane area to a query");
  search_args.attach(search, /*with_threads=*/true);
  search->add_option("--song", search_song, "query song id")->required();
  search->add_option("-k,--top", search_k, "number of songs to list")
      ->check(CLI::Range(1, 1 << 20));
  search->callback([&] { runSearch(search_args, search_song, search_k, out); });

  // pairwise
  MetricArgs pairwise_args;
  bool pairwise_csv = false;
  CLI::App* pairwise =
      app.add_subcommand("pairwise", "full distance matrix over the corpus");
  pairwise_args.attach(pairwise, /*with_threads=*/true);
  pairwise->add_flag("--csv", pairwise_csv, "emit CSV instead of aligned text");
  pairwise->callback([&] { runPairwise(pairwise_args, pairwise_csv, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
    return 0;
  } catch (const CLI::ParseError& parse_error) {
    const int code = app.exit(parse_error, out, err);
    return code == 0 ? 0 : 1;
  } catch (const Error& error) {
    err << "error: " << error.what() << '\n';
    return 2;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << '\n';
    return 2;
  }
}

}  // namespace chordspace::cli
