/**
 * @file chord_symbol.cpp
 * @brief Recursive-descent chord symbol parser and renderer.
 *
 * Tokenization is longest-match: the root absorbs up to two accidentals
 * ("Cb9" is a ninth chord on Cb, not C with a flat nine), one quality token
 * may follow, then any number of extension tokens. Sus tokens are accepted
 * in extension position so spellings like "G7sus4" and "G9sus4" work; the
 * displaced quality is kept as an extension token so rendering round-trips.
 */

#include "chordspace/chord_symbol.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <tuple>

#include "chordspace/errors.h"

namespace chordspace {

namespace {

struct QualityToken {
  std::string_view text;
  ChordFamily family;
};

// Longest token first; ties in length keep source order.
constexpr QualityToken kQualities[] = {
    {"minMaj7", ChordFamily::kMinorMajor7},
    {"m7b5", ChordFamily::kMinor7Flat5},
    {"maj7", ChordFamily::kMajor7},
    {"add9", ChordFamily::kMajorTriadAdd9},
    {"dim7", ChordFamily::kDiminished7},
    {"sus4", ChordFamily::kSus},
    {"sus2", ChordFamily::kSus},
    {"mM7", ChordFamily::kMinorMajor7},
    {"dim", ChordFamily::kDiminishedTriad},
    {"sus", ChordFamily::kSus},
    {"aug", ChordFamily::kAugmentedTriad},
    {"M7", ChordFamily::kMajor7},
    {"m7", ChordFamily::kMinor7},
    {"m6", ChordFamily::kMinor6},
    {"o7", ChordFamily::kDiminished7},
    {"m", ChordFamily::kMinorTriad},
    {"o", ChordFamily::kDiminishedTriad},
    {"+", ChordFamily::kAugmentedTriad},
    {"7", ChordFamily::kDominant7},
    {"6", ChordFamily::kMajor6},
    {"5", ChordFamily::kPower},
    {"M", ChordFamily::kMajorTriad},
};

// Extension tokens, longest first. Sus tokens are legal here too.
constexpr std::string_view kExtTokens[] = {
    "sus4", "sus2", "sus", "b13", "#13", "b11", "#11",
    "13",   "11",   "b9",  "#9",  "b5",  "#5",  "9",   "5",
};

constexpr int kLetterSemitone[7] = {9, 11, 0, 2, 4, 5, 7};  // A..G

bool isSusToken(std::string_view token) {
  return token == "sus" || token == "sus2" || token == "sus4";
}

/// Canonical spelling of a family's quality token, as used by renderChord
/// and when a sus token displaces the quality.
std::string_view canonicalQualityToken(ChordFamily family) {
  switch (family) {
    case ChordFamily::kMajor7: return "M7";
    case ChordFamily::kDominant7: return "7";
    case ChordFamily::kMinor7: return "m7";
    case ChordFamily::kMinor7Flat5: return "m7b5";
    case ChordFamily::kDiminished7: return "dim7";
    case ChordFamily::kMajorTriad: return "M";
    case ChordFamily::kMajorTriadAdd9: return "add9";
    case ChordFamily::kMinorTriad: return "m";
    case ChordFamily::kDiminishedTriad: return "dim";
    case ChordFamily::kAugmentedTriad: return "aug";
    case ChordFamily::kPower: return "5";
    case ChordFamily::kMinorMajor7: return "mM7";
    case ChordFamily::kMajor6: return "6";
    case ChordFamily::kMinor6: return "m6";
    case ChordFamily::kSus:
    case ChordFamily::kNoChord: return "";
  }
  return "";
}

/// Sort key for extension tokens: displaced quality tokens first, then
/// degree extensions by (degree, flat < natural < sharp), sus tokens last.
/// Keeps rendered text re-parseable ("7" must precede "sus4"). A bare
/// degree like "5" ranks as a degree even though it doubles as the power
/// quality token; leading with it would make the reparse eat it as one.
std::tuple<int, int, int, std::string> extensionRank(const std::string& token) {
  if (isSusToken(token)) return {2, 0, 0, token};
  int accidental = 1;
  std::string_view rest = token;
  if (!rest.empty() && rest.front() == 'b') {
    accidental = 0;
    rest.remove_prefix(1);
  } else if (!rest.empty() && rest.front() == '#') {
    accidental = 2;
    rest.remove_prefix(1);
  }
  const bool is_degree =
      !rest.empty() && std::all_of(rest.begin(), rest.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      });
  if (!is_degree) return {0, 0, 0, token};
  int degree = 0;
  for (char c : rest) degree = degree * 10 + (c - '0');
  return {1, degree, accidental, token};
}

void sortExtensions(std::vector<std::string>& extensions) {
  std::sort(extensions.begin(), extensions.end(),
            [](const std::string& a, const std::string& b) {
              return extensionRank(a) < extensionRank(b);
            });
}

bool isExtToken(std::string_view token) {
  for (std::string_view ext : kExtTokens) {
    if (ext == token) return true;
  }
  return false;
}

bool isNaturalDegree(std::string_view token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(), [](unsigned char c) {
           return std::isdigit(c) != 0;
         });
}

/// Emission order for renderChord. The canonical object order does not
/// always re-tokenize: a leading accidental is absorbed into the root, and
/// "m7" followed by "b5" fuses into the m7b5 quality. Text therefore leads
/// with any displaced quality token, then natural degrees, sus tokens, and
/// altered degrees, with "b5" last.
std::vector<std::string> renderOrder(const std::vector<std::string>& extensions) {
  std::vector<std::string> ordered;
  ordered.reserve(extensions.size());
  const auto take = [&](auto&& want) {
    for (const auto& ext : extensions) {
      if (want(ext)) ordered.push_back(ext);
    }
  };
  take([](const std::string& e) { return !isExtToken(e); });
  take([](const std::string& e) { return isExtToken(e) && isNaturalDegree(e); });
  take([](const std::string& e) { return isSusToken(e); });
  take([](const std::string& e) {
    return isExtToken(e) && !isNaturalDegree(e) && !isSusToken(e) && e != "b5";
  });
  take([](const std::string& e) { return e == "b5"; });
  return ordered;
}

std::optional<PitchClass> matchRoot(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) return std::nullopt;
  const char letter = text[pos];
  if (letter < 'A' || letter > 'G') return std::nullopt;
  int semitone = kLetterSemitone[letter - 'A'];
  ++pos;
  for (int i = 0; i < 2 && pos < text.size(); ++i) {
    if (text[pos] == '#') {
      ++semitone;
    } else if (text[pos] == 'b') {
      --semitone;
    } else {
      break;
    }
    ++pos;
  }
  return PitchClass(semitone);
}

[[noreturn]] void throwUnparseable(std::string_view symbol, std::string_view why) {
  throw Error(Errc::kUnparseableSymbol,
              "unparseable chord symbol '" + std::string(symbol) + "': " +
                  std::string(why));
}

[[noreturn]] void throwUnknownQuality(std::string_view symbol, std::string_view rest) {
  throw Error(Errc::kUnknownQuality,
              "unknown quality in chord symbol '" + std::string(symbol) +
                  "' at '" + std::string(rest) + "'");
}

/// Parses root + quality + extensions (no slash, no polychord).
ParsedChord parseBody(std::string_view body, std::string_view whole) {
  if (body == "NC") {
    ParsedChord nc;
    nc.family = ChordFamily::kNoChord;
    return nc;
  }

  std::size_t pos = 0;
  const auto root = matchRoot(body, pos);
  if (!root) throwUnparseable(whole, "expected a root letter A-G or 'NC'");

  ParsedChord chord;
  chord.root = *root;

  bool has_quality = false;
  ChordFamily quality_family = ChordFamily::kMajorTriad;
  std::string_view quality_text;
  for (const auto& q : kQualities) {
    if (body.compare(pos, q.text.size(), q.text) == 0) {
      has_quality = true;
      quality_family = q.family;
      quality_text = q.text;
      pos += q.text.size();
      break;
    }
  }

  while (pos < body.size()) {
    bool matched = false;
    for (std::string_view ext : kExtTokens) {
      if (body.compare(pos, ext.size(), ext) == 0) {
        chord.extensions.emplace_back(ext);
        pos += ext.size();
        matched = true;
        break;
      }
    }
    if (!matched) throwUnknownQuality(whole, body.substr(pos));
  }

  // Family resolution. A bare root is a major triad unless followed by
  // 9/11/13, which imply a dominant 7th ("C13" is C7 plus a 13th). The same
  // degrees after an explicit triad quality imply that family's 7th: "Cm9"
  // is Cm7 plus a 9th, "CM13" is CM7 plus a 13th. Altered degrees don't
  // ("Cm#11" stays a triad).
  const bool implies_seventh =
      std::any_of(chord.extensions.begin(), chord.extensions.end(),
                  [](const std::string& e) { return e == "9" || e == "11" || e == "13"; });
  if (has_quality) {
    if (implies_seventh && quality_family == ChordFamily::kMinorTriad) {
      quality_family = ChordFamily::kMinor7;
    } else if (implies_seventh && quality_family == ChordFamily::kMajorTriad) {
      quality_family = ChordFamily::kMajor7;
    }
    chord.family = quality_family;
  } else {
    chord.family = implies_seventh ? ChordFamily::kDominant7
                                   : ChordFamily::kMajorTriad;
  }

  // A sus token anywhere makes the chord a sus chord; whatever quality it
  // displaced stays visible as an extension token.
  const bool has_sus_ext = std::any_of(chord.extensions.begin(), chord.extensions.end(),
                                       [](const std::string& e) { return isSusToken(e); });
  if (quality_family == ChordFamily::kSus && has_quality) {
    chord.family = ChordFamily::kSus;
    chord.extensions.emplace_back(quality_text);
  } else if (has_sus_ext) {
    if (has_quality) chord.extensions.emplace_back(canonicalQualityToken(quality_family));
    chord.family = ChordFamily::kSus;
  }

  sortExtensions(chord.extensions);
  return chord;
}

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

ParsedChord parsePart(std::string_view part, std::string_view whole);

/// One side of a slash: body plus optional "/bass".
ParsedChord parseSlashed(std::string_view text, std::string_view whole) {
  const auto slash = text.rfind('/');
  if (slash == std::string_view::npos) return parseBody(text, whole);

  const std::string_view body = text.substr(0, slash);
  const std::string_view bass_text = text.substr(slash + 1);
  if (body.empty()) throwUnparseable(whole, "empty chord before '/'");

  std::size_t pos = 0;
  const auto bass = matchRoot(bass_text, pos);
  if (!bass) throwUnparseable(whole, "expected a bass root after '/'");
  if (pos != bass_text.size()) throwUnknownQuality(whole, bass_text.substr(pos));

  ParsedChord chord = parseBody(body, whole);
  if (chord.isNoChord()) throwUnknownQuality(whole, "/");
  chord.bass = *bass;
  return chord;
}

ParsedChord parsePart(std::string_view part, std::string_view whole) {
  // Polychord "upper|lower": split at the last bar so "A|B|C" nests as
  // (A|B) stacked over C.
  const auto bar = part.rfind('|');
  if (bar == std::string_view::npos) return parseSlashed(part, whole);

  const std::string_view upper_text = part.substr(0, bar);
  const std::string_view lower_text = part.substr(bar + 1);
  if (upper_text.empty() || lower_text.empty())
    throwUnparseable(whole, "polychord needs a chord on each side of '|'");

  ParsedChord lower = parseSlashed(lower_text, whole);
  ParsedChord upper = parsePart(upper_text, whole);
  if (lower.isNoChord() || upper.isNoChord()) throwUnknownQuality(whole, "|");
  lower.upper = std::make_shared<const ParsedChord>(std::move(upper));
  return lower;
}

}  // namespace

ParsedChord parseChord(std::string_view symbol) {
  const std::string_view text = trimmed(symbol);
  if (text.empty()) throwUnparseable(symbol, "empty symbol");

  ParsedChord chord = parsePart(text, text);
  chord.raw = std::string(symbol);
  return chord;
}

bool operator==(const ParsedChord& a, const ParsedChord& b) {
  if (a.family != b.family || a.bass != b.bass || a.extensions != b.extensions)
    return false;
  if (!a.isNoChord() && a.root != b.root) return false;
  if (static_cast<bool>(a.upper) != static_cast<bool>(b.upper)) return false;
  if (a.upper && !(*a.upper == *b.upper)) return false;
  return true;  // raw is presentation only
}

std::string renderChord(const ParsedChord& chord) {
  if (chord.isNoChord()) return "NC";

  const std::vector<std::string> exts = renderOrder(chord.extensions);
  std::string out = pitchName(chord.root);
  if (chord.family != ChordFamily::kSus) {
    // Sus chords render extensions only (they already carry the sus token
    // and any displaced quality); everything else leads with its quality.
    std::string_view quality = canonicalQualityToken(chord.family);
    // Pretty forms: a bare major triad, and "C9"/"Cm11"/"CM13" style stacks
    // where a leading natural 9/11/13 implies the 7th.
    if (chord.family == ChordFamily::kMajorTriad && exts.empty()) {
      quality = "";
    } else if (!exts.empty()) {
      const std::string& first = exts.front();
      if (first == "9" || first == "11" || first == "13") {
        if (chord.family == ChordFamily::kDominant7) quality = "";
        else if (chord.family == ChordFamily::kMinor7) quality = "m";
        else if (chord.family == ChordFamily::kMajor7) quality = "M";
      }
    }
    out += quality;
  }
  for (const auto& ext : exts) out += ext;
  if (chord.bass) out += "/" + pitchName(*chord.bass);
  if (chord.upper) return renderChord(*chord.upper) + "|" + out;
  return out;
}

Table1Category table1Category(const ParsedChord& chord) {
  if (chord.upper) return Table1Category::kPolychord;
  if (chord.bass) return Table1Category::kSlashChord;
  switch (chord.family) {
    case ChordFamily::kMajor7:
    case ChordFamily::kMajor6: return Table1Category::kMajor7;
    case ChordFamily::kDominant7: return Table1Category::kDominant7;
    case ChordFamily::kMinor7:
    case ChordFamily::kMinor6:
    case ChordFamily::kMinorMajor7: return Table1Category::kMinor7;
    case ChordFamily::kMinor7Flat5: return Table1Category::kMinor7Flat5;
    case ChordFamily::kDiminished7: return Table1Category::kDiminished7;
    case ChordFamily::kMajorTriad: return Table1Category::kMajorTriad;
    case ChordFamily::kMajorTriadAdd9: return Table1Category::kMajorTriadAdd9;
    case ChordFamily::kMinorTriad: return Table1Category::kMinorTriad;
    case ChordFamily::kDiminishedTriad: return Table1Category::kDiminishedTriad;
    case ChordFamily::kAugmentedTriad: return Table1Category::kAugmentedTriad;
    case ChordFamily::kSus: return Table1Category::kSusChord;
    case ChordFamily::kPower: return Table1Category::kPowerChord;
    case ChordFamily::kNoChord: return Table1Category::kNoChord;
  }
  return Table1Category::kNoChord;
}

std::vector<int> chordTones(const ParsedChord& chord) {
  switch (chord.family) {
    case ChordFamily::kMajor7: return {0, 4, 7, 11};
    case ChordFamily::kDominant7: return {0, 4, 7, 10};
    case ChordFamily::kMinor7: return {0, 3, 7, 10};
    case ChordFamily::kMinor7Flat5: return {0, 3, 6, 10};
    case ChordFamily::kDiminished7: return {0, 3, 6, 9};
    case ChordFamily::kMajorTriad: return {0, 4, 7};
    case ChordFamily::kMajorTriadAdd9: return {0, 2, 4, 7};
    case ChordFamily::kMinorTriad: return {0, 3, 7};
    case ChordFamily::kDiminishedTriad: return {0, 3, 6};
    case ChordFamily::kAugmentedTriad: return {0, 4, 8};
    case ChordFamily::kSus: {
      const bool sus2 = std::find(chord.extensions.begin(), chord.extensions.end(),
                                  "sus2") != chord.extensions.end();
      if (sus2) return {0, 2, 7};
      return {0, 5, 7};
    }
    case ChordFamily::kPower: return {0, 7};
    case ChordFamily::kNoChord: return {};
    case ChordFamily::kMinorMajor7: return {0, 3, 7, 11};
    case ChordFamily::kMajor6: return {0, 4, 7, 9};
    case ChordFamily::kMinor6: return {0, 3, 7, 9};
  }
  return {};
}

const char* familyName(ChordFamily family) {
  switch (family) {
    case ChordFamily::kMajor7: return "major7";
    case ChordFamily::kDominant7: return "dominant7";
    case ChordFamily::kMinor7: return "minor7";
    case ChordFamily::kMinor7Flat5: return "minor7b5";
    case ChordFamily::kDiminished7: return "diminished7";
    case ChordFamily::kMajorTriad: return "major triad";
    case ChordFamily::kMajorTriadAdd9: return "major triad add9";
    case ChordFamily::kMinorTriad: return "minor triad";
    case ChordFamily::kDiminishedTriad: return "diminished triad";
    case ChordFamily::kAugmentedTriad: return "augmented triad";
    case ChordFamily::kSus: return "sus";
    case ChordFamily::kPower: return "power";
    case ChordFamily::kNoChord: return "no chord";
    case ChordFamily::kMinorMajor7: return "minor-major7";
    case ChordFamily::kMajor6: return "major6";
    case ChordFamily::kMinor6: return "minor6";
  }
  return "?";
}

const char* categoryName(Table1Category category) {
  switch (category) {
    case Table1Category::kMajor7: return "major7";
    case Table1Category::kDominant7: return "dominant7";
    case Table1Category::kMinor7: return "minor7";
    case Table1Category::kMinor7Flat5: return "minor7b5";
    case Table1Category::kDiminished7: return "diminished7";
    case Table1Category::kMajorTriad: return "major triad";
    case Table1Category::kMajorTriadAdd9: return "major triad add9";
    case Table1Category::kMinorTriad: return "minor triad";
    case Table1Category::kDiminishedTriad: return "diminished triad";
    case Table1Category::kAugmentedTriad: return "augmented triad";
    case Table1Category::kSlashChord: return "slash chord";
    case Table1Category::kSusChord: return "sus chord";
    case Table1Category::kNoChord: return "no chord";
    case Table1Category::kPowerChord: return "power chord";
    case Table1Category::kPolychord: return "polychord";
  }
  return "?";
}

}  // namespace chordspace
