#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chordspace/beats.h"
#include "chordspace/chord_symbol.h"
#include "chordspace/key_signature.h"

namespace chordspace {

/// One chord and the number of beats it stays active. beats > 0.
struct ChordEvent {
  ParsedChord chord;
  Beats beats;
};

struct Song {
  std::string id;     // unique within a corpus
  std::string title;
  std::optional<KeySignature> declared_key;
  int beats_per_measure = 4;
  std::vector<ChordEvent> events;  // non-empty

  Beats totalBeats() const;
};

struct Corpus {
  std::vector<Song> songs;

  std::size_t size() const { return songs.size(); }  // D
  const Song* findSong(std::string_view id) const;
};

}  // namespace chordspace
