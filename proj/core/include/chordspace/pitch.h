#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace chordspace {

/// A pitch class on the 12-tone circle: C=0, C#/Db=1, ..., B=11.
/// Enharmonic spellings (including double accidentals) collapse to the same
/// value; all arithmetic is modulo 12.
class PitchClass {
 public:
  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int semitones)
      : value_(static_cast<std::uint8_t>(((semitones % 12) + 12) % 12)) {}

  constexpr int value() const { return value_; }

  /// Transposed copy; semitones may be negative.
  constexpr PitchClass shifted(int semitones) const {
    return PitchClass(value_ + semitones);
  }

  friend constexpr bool operator==(PitchClass, PitchClass) = default;
  friend constexpr auto operator<=>(PitchClass, PitchClass) = default;

 private:
  std::uint8_t value_ = 0;
};

/// Canonical spelling of a pitch class. Black keys render as sharps ("A#")
/// unless prefer_flats is set ("Bb").
std::string pitchName(PitchClass pc, bool prefer_flats = false);

}  // namespace chordspace
