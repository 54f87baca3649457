#include "chordspace/key_signature.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "chordspace/errors.h"
#include "chordspace/song.h"

namespace chordspace {

namespace {

// Lowercase numerals for the twelve roots of the 0-accidental key.
const char* const kNumerals[12] = {
    "i", "♭ii", "ii", "♭iii", "iii", "iv",
    "♭v", "v", "♭vi", "vi", "♭vii", "vii",
};

std::string asciiFlats(std::string name) {
  for (std::size_t pos = name.find("♭"); pos != std::string::npos;
       pos = name.find("♭", pos)) {
    name.replace(pos, std::string("♭").size(), "b");
    ++pos;
  }
  return name;
}

}  // namespace

KeySignature KeySignature::fromMajorRoot(PitchClass root) {
  // 7 is its own inverse mod 12, so the accidental count of the key on
  // `root` is 7 * root, folded into [-6, 5] with the enharmonic point flat.
  int accidentals = (root.value() * 7) % 12;
  if (accidentals >= 6) accidentals -= 12;
  return KeySignature{accidentals};
}

std::string keySignatureName(KeySignature key) {
  if (key.accidentals == 0) return "0";
  if (key.accidentals > 0) return std::to_string(key.accidentals) + "#";
  return std::to_string(-key.accidentals) + "b";
}

std::vector<KeySignature> diatonicKeys(ChordClass chord_class) {
  if (!chord_class.isPitched()) {
    throw Error(Errc::kNonPitchedClass,
                className(chord_class) + " is not diatonic to any key");
  }
  const int r = chord_class.root().value();
  std::vector<int> major_roots;
  switch (chord_class.type()) {
    case ChordType::kMajor7: major_roots = {r, r + 7}; break;          // I, IV
    case ChordType::kMinor7: major_roots = {r - 2, r - 4, r - 9}; break;  // ii, iii, vi
    case ChordType::kDominant7: major_roots = {r + 5}; break;          // V
    case ChordType::kMinor7Flat5: major_roots = {r + 1}; break;        // vii
    case ChordType::kDiminished7: break;  // not diatonic to major
  }
  std::vector<KeySignature> keys;
  keys.reserve(major_roots.size());
  for (int root : major_roots)
    keys.push_back(KeySignature::fromMajorRoot(PitchClass(root)));
  return keys;
}

KeyEstimate estimateKey(const ChordClassSequence& seq) {
  KeyEstimate estimate;
  estimate.song_id = seq.song_id;

  for (std::size_t i = 0; i < seq.size(); ++i) {
    const ChordClass chord_class = seq.classes[i];
    if (!chord_class.isPitched()) continue;
    for (const KeySignature& key : diatonicKeys(chord_class))
      estimate.beat_tally[key] += seq.beats[i];
  }
  if (estimate.beat_tally.empty()) {
    throw Error(Errc::kNoTonalContent,
                "song '" + seq.song_id + "' has no diatonic content");
  }

  Beats best(0);
  for (const auto& [key, beats] : estimate.beat_tally)
    best = std::max(best, beats);
  for (const auto& [key, beats] : estimate.beat_tally)
    if (beats == best) estimate.winners.push_back(key);
  estimate.ambiguous = estimate.winners.size() > 1;
  return estimate;
}

KeySignature resolveKey(const KeyEstimate& estimate,
                        std::optional<KeySignature> declared) {
  if (!estimate.ambiguous) return estimate.winners.front();
  if (declared) return *declared;
  return *std::min_element(
      estimate.winners.begin(), estimate.winners.end(),
      [](KeySignature a, KeySignature b) {
        return std::pair(std::abs(a.accidentals), a.accidentals > 0) <
               std::pair(std::abs(b.accidentals), b.accidentals > 0);
      });
}

int fifthsDistance(KeySignature a, KeySignature b) {
  return b.accidentals - a.accidentals;
}

ChordClassSequence transpose(ChordClassSequence seq, KeySignature from) {
  const int shift = -from.majorRoot().value();
  for (ChordClass& chord_class : seq.classes) {
    if (chord_class.isPitched()) {
      chord_class = ChordClass::pitched(chord_class.type(),
                                        chord_class.root().shifted(shift));
    }
  }
  return seq;
}

std::string romanNumeral(ChordClass chord_class) {
  if (!chord_class.isPitched()) {
    throw Error(Errc::kNonPitchedClass,
                className(chord_class) + " has no roman numeral");
  }
  return std::string(kNumerals[chord_class.root().value()]) +
         chordTypeSuffix(chord_class.type());
}

std::string className(ChordClass chord_class) {
  if (chord_class.isPitched()) return romanNumeral(chord_class);
  if (chord_class.isNoChord()) return "NC";
  if (chord_class.isStart()) return "<START>";
  return "<END>";
}

std::optional<ChordClass> classFromName(std::string_view name) {
  if (name == "NC") return ChordClass::noChord();
  if (name == "<START>") return ChordClass::start();
  if (name == "<END>") return ChordClass::end();
  for (int index = 0; index < ChordClass::kPitchedCount; ++index) {
    const ChordClass candidate = ChordClass::fromIndex(index);
    const std::string canonical = romanNumeral(candidate);
    if (name == canonical || name == asciiFlats(canonical)) return candidate;
  }
  return std::nullopt;
}

EstimationReport evaluateEstimation(const Corpus& corpus) {
  EstimationReport report;
  report.total = corpus.songs.size();

  for (const Song& song : corpus.songs) {
    if (!song.declared_key) {
      throw Error(Errc::kMissingDeclaredKey,
                  "song '" + song.id + "' has no declared key signature");
    }
    const ChordClassSequence seq = reduceSong(song.events, song.id);
    try {
      const KeyEstimate estimate = estimateKey(seq);
      if (estimate.ambiguous) {
        ++report.ambiguous;
        continue;
      }
      ++report.distance_histogram[fifthsDistance(estimate.winners.front(),
                                                 *song.declared_key)];
    } catch (const Error& error) {
      if (error.code() != Errc::kNoTonalContent) throw;
      ++report.ambiguous;  // no tonal evidence at all, maximally ambiguous
    }
  }
  return report;
}

}  // namespace chordspace
