#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordspace/beats.h"
#include "chordspace/chord_symbol.h"
#include "chordspace/pitch.h"

namespace chordspace {

struct ChordEvent;

/// The five harmonic types every chord reduces to. The enumerator order is
/// the canonical one used by the persisted-model index.
enum class ChordType : std::uint8_t {
  kMajor7 = 0,      // M
  kMinor7 = 1,      // m
  kDominant7 = 2,   // 7
  kMinor7Flat5 = 3, // h (half-diminished)
  kDiminished7 = 4, // o
};

/// One-letter suffix used in roman-numeral output: M, m, 7, h, o.
const char* chordTypeSuffix(ChordType type);

/// One of the 63 chord classes: 5 types x 12 roots, plus the no-chord class
/// and the <START>/<END> progression delimiters.
///
/// The canonical index is a contract shared with the persisted model file:
///   pitched: type_rank * 12 + root   (0..59)
///   NC = 60, <START> = 61, <END> = 62
class ChordClass {
 public:
  static constexpr int kPitchedCount = 60;
  static constexpr int kNoChordIndex = 60;
  static constexpr int kStartIndex = 61;
  static constexpr int kEndIndex = 62;
  static constexpr int kCount = 63;

  constexpr ChordClass() : index_(kNoChordIndex) {}

  static constexpr ChordClass pitched(ChordType type, PitchClass root) {
    return ChordClass(static_cast<std::uint8_t>(
        static_cast<int>(type) * 12 + root.value()));
  }
  static constexpr ChordClass noChord() { return ChordClass(kNoChordIndex); }
  static constexpr ChordClass start() { return ChordClass(kStartIndex); }
  static constexpr ChordClass end() { return ChordClass(kEndIndex); }

  /// index must be in [0, 63).
  static ChordClass fromIndex(int index);

  constexpr int index() const { return index_; }
  constexpr bool isPitched() const { return index_ < kPitchedCount; }
  constexpr bool isNoChord() const { return index_ == kNoChordIndex; }
  constexpr bool isStart() const { return index_ == kStartIndex; }
  constexpr bool isEnd() const { return index_ == kEndIndex; }

  /// Valid only for pitched classes.
  constexpr ChordType type() const {
    return static_cast<ChordType>(index_ / 12);
  }
  constexpr PitchClass root() const { return PitchClass(index_ % 12); }

  friend constexpr bool operator==(ChordClass, ChordClass) = default;
  friend constexpr auto operator<=>(ChordClass, ChordClass) = default;

 private:
  constexpr explicit ChordClass(std::uint8_t index) : index_(index) {}

  std::uint8_t index_;
};

/// A song reduced to chord classes, parallel to the source event durations.
/// <START>/<END> are not stored; consumers inject them.
struct ChordClassSequence {
  std::string song_id;
  std::vector<ChordClass> classes;
  std::vector<Beats> beats;

  std::size_t size() const { return classes.size(); }
  Beats totalBeats() const;
};

/// Major triads (and add9) take dominant function when the following chord
/// sits a fifth below and reduces to the major7 or minor7 type; otherwise
/// they are plain major7.
ChordClass classifyMajorTriad(PitchClass triad_root, std::optional<ChordClass> next);

/// Sus chords act as a subdominant (minor7 a fifth above) when resolving to
/// a dominant on the same root; otherwise they act as the dominant itself.
ChordClass classifySus(PitchClass sus_root, std::optional<ChordClass> next);

/// Slash chords: an inversion when the bass is a tone of the chord above the
/// slash; a sus voicing when the upper chord is minor-type rooted a fifth
/// above the bass (Dm7/G ~ G9sus4); otherwise the bass is treated as an
/// extension and the upper chord decides. Requires chord.bass.
ChordClass classifySlash(const ParsedChord& chord, std::optional<ChordClass> next);

/// Total classification of one parsed chord given the (already reduced)
/// class of the immediately following event.
ChordClass classifyChord(const ParsedChord& chord, std::optional<ChordClass> next);

/// Reduces a whole song. Context-dependent chords (major triads, sus, some
/// slash chords) need the class of the *following* event, so events are
/// resolved right to left in a single pass.
ChordClassSequence reduceSong(const std::vector<ChordEvent>& events,
                              std::string_view song_id = {});

}  // namespace chordspace
