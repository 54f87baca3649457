#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <string_view>

#include "chordspace/chord_symbol.h"
#include "chordspace/song.h"

namespace chordspace {

/// Loads a JSONL corpus, one song per line:
///   {"id": str, "title": str, "key_signature": int in [-7,7] | null,
///    "beats_per_measure": int, "chords": [[symbol, beats_num, beats_den], ...]}
///
/// Loading is strict: every record must match the schema and every chord
/// symbol must parse. Failures carry the 1-based line number. Blank lines
/// are skipped; an empty file yields an empty corpus.
Corpus loadCorpus(const std::filesystem::path& path);

/// Stream variant used by loadCorpus; source_name seasons error messages.
Corpus readCorpus(std::istream& in, std::string_view source_name = "<stream>");

/// Per-category symbol counts over a corpus.
struct CategoryHistogram {
  std::array<std::size_t, kTable1CategoryCount> counts{};
  std::size_t total = 0;

  double percentage(Table1Category category) const;
};

CategoryHistogram corpusStats(const Corpus& corpus);

}  // namespace chordspace
