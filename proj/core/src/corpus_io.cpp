#include "chordspace/corpus_io.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>

#include "json.hpp"

#include "chordspace/errors.h"
#include "chordspace/key_signature.h"

namespace chordspace {

namespace {

using nlohmann::json;

std::string locate(std::string_view source, std::size_t line) {
  std::ostringstream out;
  out << source << ":" << line << ": ";
  return out.str();
}

[[noreturn]] void throwMalformed(std::string_view source, std::size_t line,
                                 const std::string& why) {
  throw Error(Errc::kMalformedRecord, locate(source, line) + why);
}

Song parseSongRecord(const json& record, std::string_view source,
                     std::size_t line) {
  if (!record.is_object())
    throwMalformed(source, line, "record is not a JSON object");
  for (const char* field :
       {"id", "title", "key_signature", "beats_per_measure", "chords"}) {
    if (!record.contains(field))
      throwMalformed(source, line, std::string("missing field '") + field + "'");
  }

  Song song;

  const json& id = record.at("id");
  if (!id.is_string() || id.get_ref<const std::string&>().empty())
    throwMalformed(source, line, "'id' must be a non-empty string");
  song.id = id.get<std::string>();

  const json& title = record.at("title");
  if (!title.is_string())
    throwMalformed(source, line, "'title' must be a string");
  song.title = title.get<std::string>();

  const json& key = record.at("key_signature");
  if (key.is_number_integer()) {
    const int accidentals = key.get<int>();
    if (accidentals < -7 || accidentals > 7)
      throwMalformed(source, line, "'key_signature' outside [-7, 7]");
    song.declared_key = KeySignature{accidentals};
  } else if (!key.is_null()) {
    throwMalformed(source, line, "'key_signature' must be an integer or null");
  }

  const json& beats_per_measure = record.at("beats_per_measure");
  if (!beats_per_measure.is_number_integer() || beats_per_measure.get<int>() <= 0)
    throwMalformed(source, line, "'beats_per_measure' must be a positive integer");
  song.beats_per_measure = beats_per_measure.get<int>();

  const json& chords = record.at("chords");
  if (!chords.is_array() || chords.empty())
    throwMalformed(source, line, "'chords' must be a non-empty array");
  song.events.reserve(chords.size());
  for (const json& entry : chords) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
        !entry[1].is_number_integer() || !entry[2].is_number_integer()) {
      throwMalformed(source, line,
                     "each chord must be [symbol, beats_num, beats_den]");
    }
    const auto num = entry[1].get<std::int64_t>();
    const auto den = entry[2].get<std::int64_t>();
    if (num <= 0 || den <= 0)
      throwMalformed(source, line, "chord durations must be positive");

    ChordEvent event;
    try {
      event.chord = parseChord(entry[0].get<std::string>());
    } catch (const Error& error) {
      throw Error(error.code(), locate(source, line) + error.what());
    }
    event.beats = Beats(num, den);
    song.events.push_back(std::move(event));
  }
  return song;
}

}  // namespace

Corpus readCorpus(std::istream& in, std::string_view source_name) {
  Corpus corpus;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_number = 0;

  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& error) {
      throwMalformed(source_name, line_number,
                     std::string("invalid JSON: ") + error.what());
    }

    Song song = parseSongRecord(record, source_name, line_number);
    if (!seen_ids.insert(song.id).second) {
      throwMalformed(source_name, line_number,
                     "duplicate song id '" + song.id + "'");
    }
    corpus.songs.push_back(std::move(song));
  }
  return corpus;
}

Corpus loadCorpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::kIoError,
                "cannot open corpus file '" + path.string() + "'");
  }
  return readCorpus(in, path.string());
}

double CategoryHistogram::percentage(Table1Category category) const {
  if (total == 0) return 0.0;
  return 100.0 * static_cast<double>(counts[static_cast<std::size_t>(category)]) /
         static_cast<double>(total);
}

CategoryHistogram corpusStats(const Corpus& corpus) {
  CategoryHistogram histogram;
  for (const Song& song : corpus.songs) {
    for (const ChordEvent& event : song.events) {
      ++histogram.counts[static_cast<std::size_t>(table1Category(event.chord))];
      ++histogram.total;
    }
  }
  return histogram;
}

}  // namespace chordspace
