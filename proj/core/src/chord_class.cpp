#include "chordspace/chord_class.h"

#include <algorithm>
#include <numeric>
#include <optional>

#include "chordspace/errors.h"
#include "chordspace/song.h"

namespace chordspace {

const char* chordTypeSuffix(ChordType type) {
  switch (type) {
    case ChordType::kMajor7: return "M";
    case ChordType::kMinor7: return "m";
    case ChordType::kDominant7: return "7";
    case ChordType::kMinor7Flat5: return "h";
    case ChordType::kDiminished7: return "o";
  }
  return "?";
}

ChordClass ChordClass::fromIndex(int index) {
  if (index < 0 || index >= kCount) {
    throw Error(Errc::kParameterOutOfRange,
                "chord class index " + std::to_string(index) +
                    " outside [0, 63)");
  }
  return ChordClass(static_cast<std::uint8_t>(index));
}

Beats ChordClassSequence::totalBeats() const {
  return std::accumulate(beats.begin(), beats.end(), Beats(0));
}

namespace {

/// Families whose class does not depend on the following chord. Major triads
/// and sus chords are context-dependent; power chords and NC are unpitched.
std::optional<ChordType> contextFreeType(ChordFamily family) {
  switch (family) {
    case ChordFamily::kMajor7:
    case ChordFamily::kMajor6: return ChordType::kMajor7;
    case ChordFamily::kMinor7:
    case ChordFamily::kMinorTriad:
    case ChordFamily::kMinor6:
    case ChordFamily::kMinorMajor7: return ChordType::kMinor7;
    case ChordFamily::kDominant7:
    case ChordFamily::kAugmentedTriad: return ChordType::kDominant7;
    case ChordFamily::kMinor7Flat5: return ChordType::kMinor7Flat5;
    case ChordFamily::kDiminished7:
    case ChordFamily::kDiminishedTriad: return ChordType::kDiminished7;
    case ChordFamily::kMajorTriad:
    case ChordFamily::kMajorTriadAdd9:
    case ChordFamily::kSus:
    case ChordFamily::kPower:
    case ChordFamily::kNoChord: return std::nullopt;
  }
  return std::nullopt;
}

ChordClass resolveWithoutBass(const ParsedChord& chord,
                              std::optional<ChordClass> next) {
  switch (chord.family) {
    case ChordFamily::kMajorTriad:
    case ChordFamily::kMajorTriadAdd9:
      return classifyMajorTriad(chord.root, next);
    case ChordFamily::kSus:
      return classifySus(chord.root, next);
    case ChordFamily::kPower:
    case ChordFamily::kNoChord:
      return ChordClass::noChord();
    default:
      return ChordClass::pitched(*contextFreeType(chord.family), chord.root);
  }
}

}  // namespace

ChordClass classifyMajorTriad(PitchClass triad_root,
                              std::optional<ChordClass> next) {
  if (next && next->isPitched() && next->root() == triad_root.shifted(5) &&
      (next->type() == ChordType::kMajor7 || next->type() == ChordType::kMinor7)) {
    return ChordClass::pitched(ChordType::kDominant7, triad_root);
  }
  return ChordClass::pitched(ChordType::kMajor7, triad_root);
}

ChordClass classifySus(PitchClass sus_root, std::optional<ChordClass> next) {
  if (next && next->isPitched() && next->type() == ChordType::kDominant7 &&
      next->root() == sus_root) {
    return ChordClass::pitched(ChordType::kMinor7, sus_root.shifted(7));
  }
  return ChordClass::pitched(ChordType::kDominant7, sus_root);
}

ChordClass classifySlash(const ParsedChord& chord,
                         std::optional<ChordClass> next) {
  const PitchClass bass = *chord.bass;
  const int rel = PitchClass(bass.value() - chord.root.value()).value();
  const auto tones = chordTones(chord);
  const bool inversion = std::find(tones.begin(), tones.end(), rel) != tones.end();

  // Dm7/G is a G sus voicing: a minor-type chord a fifth above the bass.
  if (!inversion && contextFreeType(chord.family) == ChordType::kMinor7 &&
      chord.root == bass.shifted(7)) {
    return classifySus(bass, next);
  }
  // Inversions keep the written chord; otherwise the bass is heard as an
  // extension and the written chord still decides.
  return resolveWithoutBass(chord, next);
}

ChordClass classifyChord(const ParsedChord& chord,
                         std::optional<ChordClass> next) {
  // Polychords classify by their lower structure, which is `chord` itself.
  if (chord.bass) return classifySlash(chord, next);
  return resolveWithoutBass(chord, next);
}

ChordClassSequence reduceSong(const std::vector<ChordEvent>& events,
                              std::string_view song_id) {
  ChordClassSequence seq;
  seq.song_id = std::string(song_id);
  seq.classes.resize(events.size());
  seq.beats.reserve(events.size());

  // Context-dependent rules look at the class of the following event, so the
  // single pass runs right to left.
  std::optional<ChordClass> next;
  for (std::size_t i = events.size(); i-- > 0;) {
    seq.classes[i] = classifyChord(events[i].chord, next);
    next = seq.classes[i];
  }
  for (const auto& event : events) seq.beats.push_back(event.beats);
  return seq;
}

}  // namespace chordspace
