#pragma once

#include <string>
#include <vector>

#include "chordspace/chord_class.h"
#include "chordspace/key_signature.h"
#include "chordspace/song.h"

namespace chordspace {

/// A song after the shared front half of the pipeline: reduced to chord
/// classes and transposed to the 0-accidental signature.
struct NormalizedSong {
  std::string id;
  std::string title;
  KeySignature key;               // the signature the song was transposed from
  bool ambiguous = false;         // key estimation returned several winners
  int beats_per_measure = 4;
  ChordClassSequence sequence;    // transposed
};

/// reduce -> estimate -> resolve against the declared key -> transpose.
/// Songs with no tonal content (all diminished / no-chord) fall back to the
/// declared key, or to the 0-accidental signature when none is declared.
NormalizedSong normalizeSong(const Song& song);

std::vector<NormalizedSong> normalizeCorpus(const Corpus& corpus);

}  // namespace chordspace
