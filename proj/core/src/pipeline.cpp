#include "chordspace/pipeline.h"

#include <utility>

#include "chordspace/errors.h"

namespace chordspace {

NormalizedSong normalizeSong(const Song& song) {
  NormalizedSong result;
  result.id = song.id;
  result.title = song.title;
  result.beats_per_measure = song.beats_per_measure;

  ChordClassSequence seq = reduceSong(song.events, song.id);
  try {
    const KeyEstimate estimate = estimateKey(seq);
    result.key = resolveKey(estimate, song.declared_key);
    result.ambiguous = estimate.ambiguous;
  } catch (const Error& error) {
    if (error.code() != Errc::kNoTonalContent) throw;
    result.key = song.declared_key.value_or(KeySignature{0});
    result.ambiguous = true;
  }
  result.sequence = transpose(std::move(seq), result.key);
  return result;
}

std::vector<NormalizedSong> normalizeCorpus(const Corpus& corpus) {
  std::vector<NormalizedSong> songs;
  songs.reserve(corpus.songs.size());
  for (const Song& song : corpus.songs) songs.push_back(normalizeSong(song));
  return songs;
}

}  // namespace chordspace
