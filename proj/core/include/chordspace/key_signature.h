#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordspace/beats.h"
#include "chordspace/chord_class.h"
#include "chordspace/pitch.h"

namespace chordspace {

struct Corpus;

/// A key signature, stored as an accidental count: negative = flats,
/// positive = sharps, zero = C major / A minor. The major key carrying that
/// signature sits seven semitones up per sharp (circle of fifths).
struct KeySignature {
  int accidentals = 0;  // [-7, 7]

  PitchClass majorRoot() const { return PitchClass(accidentals * 7); }

  /// Canonical spelling for a major-key root: |accidentals| <= 6, with the
  /// six-accidental point spelled flat (Gb, not F#).
  static KeySignature fromMajorRoot(PitchClass root);

  friend bool operator==(const KeySignature&, const KeySignature&) = default;
  friend auto operator<=>(const KeySignature&, const KeySignature&) = default;
};

/// "2#", "3b" or "0".
std::string keySignatureName(KeySignature key);

struct KeyEstimate {
  std::string song_id;
  std::vector<KeySignature> winners;        // argmax keys, sorted; non-empty
  std::map<KeySignature, Beats> beat_tally;
  bool ambiguous = false;                   // |winners| > 1
};

/// The major keys whose diatonic 7th chords contain the given class:
/// two for major7, three for minor7, one each for dominant7 and minor7b5,
/// none for diminished7. Throws Error{kNonPitchedClass} for NC/START/END.
std::vector<KeySignature> diatonicKeys(ChordClass chord_class);

/// Beat-tally key signature estimation: every pitched, non-diminished class
/// credits its active beats to each key it is diatonic to; the signature
/// with the most beats wins. Throws Error{kNoTonalContent} when nothing
/// tallies (only diminished / no-chord events).
KeyEstimate estimateKey(const ChordClassSequence& seq);

/// An unambiguous estimate always wins. Ties defer to the declared key when
/// one exists, otherwise to the winner with the fewest accidentals (flats
/// before sharps).
KeySignature resolveKey(const KeyEstimate& estimate,
                        std::optional<KeySignature> declared);

/// Signed circle-of-fifths steps from a to b: negative = flatward.
int fifthsDistance(KeySignature a, KeySignature b);

/// Shifts every pitched root down by the key's major root, i.e. transposes
/// the sequence to the signature without sharps or flats. Types, durations
/// and no-chord events are untouched.
ChordClassSequence transpose(ChordClassSequence seq, KeySignature from);

/// Roman numeral for a pitched class already transposed to the 0-accidental
/// signature, e.g. "iim", "v7", "♭ii7". Throws Error{kNonPitchedClass}.
std::string romanNumeral(ChordClass chord_class);

/// Display name for any class: roman numeral, "NC", "<START>" or "<END>".
std::string className(ChordClass chord_class);

/// Inverse of className; accepts ASCII "b" for the flat sign. Returns
/// nullopt for unknown names.
std::optional<ChordClass> classFromName(std::string_view name);

/// Corpus-wide comparison of estimated vs declared signatures.
struct EstimationReport {
  std::map<int, std::size_t> distance_histogram;  // estimate -> declared steps
  std::size_t ambiguous = 0;                      // excluded from the histogram
  std::size_t total = 0;
};

/// Requires a declared key on every song (Error{kMissingDeclaredKey}).
EstimationReport evaluateEstimation(const Corpus& corpus);

}  // namespace chordspace
