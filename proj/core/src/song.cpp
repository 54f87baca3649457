#include "chordspace/song.h"

namespace chordspace {

Beats Song::totalBeats() const {
  Beats total(0);
  for (const auto& event : events) total += event.beats;
  return total;
}

const Song* Corpus::findSong(std::string_view id) const {
  for (const auto& song : songs) {
    if (song.id == id) return &song;
  }
  return nullptr;
}

}  // namespace chordspace
