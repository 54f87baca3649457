#include "chordspace/pitch.h"

namespace chordspace {

namespace {

constexpr const char* kSharpNames[12] = {"C",  "C#", "D",  "D#", "E",  "F",
                                         "F#", "G",  "G#", "A",  "A#", "B"};
constexpr const char* kFlatNames[12] = {"C",  "Db", "D",  "Eb", "E",  "F",
                                        "Gb", "G",  "Ab", "A",  "Bb", "B"};

}  // namespace

std::string pitchName(PitchClass pc, bool prefer_flats) {
  return prefer_flats ? kFlatNames[pc.value()] : kSharpNames[pc.value()];
}

}  // namespace chordspace
