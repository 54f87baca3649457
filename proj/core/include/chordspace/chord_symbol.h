#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordspace/pitch.h"

namespace chordspace {

/// Syntactic chord family, decided purely by the spelled quality.
/// Harmonic meaning (the five-type reduction) is applied later.
enum class ChordFamily : std::uint8_t {
  kMajor7,
  kDominant7,
  kMinor7,
  kMinor7Flat5,
  kDiminished7,
  kMajorTriad,
  kMajorTriadAdd9,
  kMinorTriad,
  kDiminishedTriad,
  kAugmentedTriad,
  kSus,
  kPower,
  kNoChord,
  kMinorMajor7,
  kMajor6,
  kMinor6,
};

const char* familyName(ChordFamily family);

/// The fifteen corpus-statistics categories. Slash chords and polychords are
/// counted syntactically regardless of the chord under the slash/stack;
/// 6th and minor-major variants fold into their nearest 7th-chord category.
enum class Table1Category : std::uint8_t {
  kMajor7,
  kDominant7,
  kMinor7,
  kMinor7Flat5,
  kDiminished7,
  kMajorTriad,
  kMajorTriadAdd9,
  kMinorTriad,
  kDiminishedTriad,
  kAugmentedTriad,
  kSlashChord,
  kSusChord,
  kNoChord,
  kPowerChord,
  kPolychord,
};

inline constexpr int kTable1CategoryCount = 15;

const char* categoryName(Table1Category category);

/// Structured decomposition of one chord symbol.
///
/// `extensions` holds canonicalized tokens ("9", "b9", "#11", "sus4", ...)
/// in a fixed order so that structural equality is order-insensitive.
/// For polychords (`upper|lower`) this object is the lower structure and
/// `upper` holds the stacked chord. `raw` preserves the input text and is
/// ignored by equality.
struct ParsedChord {
  PitchClass root{};
  ChordFamily family = ChordFamily::kNoChord;
  std::vector<std::string> extensions;
  std::optional<PitchClass> bass;
  std::shared_ptr<const ParsedChord> upper;
  std::string raw;

  bool isNoChord() const { return family == ChordFamily::kNoChord; }
};

bool operator==(const ParsedChord& a, const ParsedChord& b);
inline bool operator!=(const ParsedChord& a, const ParsedChord& b) { return !(a == b); }

/// Parses a chord symbol.
///
/// Grammar (longest-match tokenization, case-sensitive root):
///   chord   := root quality? ext* ("/" root)? | chord "|" chord | "NC"
///   root    := [A-G] ("#"|"b"){0,2}
///   quality := "minMaj7" | "m7b5" | "maj7" | "add9" | "dim7" | "sus4" | "sus2"
///            | "mM7" | "dim" | "sus" | "aug" | "M7" | "m7" | "m6" | "o7"
///            | "m" | "o" | "+" | "7" | "6" | "5" | "M"
///   ext     := ("b"|"#")? ("5"|"9"|"11"|"13") | "sus4" | "sus2" | "sus"
///
/// A bare root is a major triad; "C5" is a power chord. A root followed
/// directly by 9/11/13 is a dominant ("C13" is C7 plus a 13th). A sus token
/// anywhere after the root makes the chord a sus chord ("G7sus4", "G9sus4"),
/// with the preceding quality kept as an extension token.
///
/// Throws Error{kUnparseableSymbol} when no root letter can be read and
/// Error{kUnknownQuality} when text remains after the last valid token.
ParsedChord parseChord(std::string_view symbol);

/// Canonical textual form; re-parsing it yields a chord structurally equal
/// to the original (raw text aside).
std::string renderChord(const ParsedChord& chord);

/// The statistics category of a parsed symbol. Total: every parse result
/// lands in exactly one category.
Table1Category table1Category(const ParsedChord& chord);

/// Semitone offsets of the family's defining tones from the root, e.g.
/// {0,4,7,11} for major7. Extension tokens do not contribute. Sus chords
/// report the suspended degree recorded at parse time.
std::vector<int> chordTones(const ParsedChord& chord);

}  // namespace chordspace
