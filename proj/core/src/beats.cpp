#include "chordspace/beats.h"

namespace chordspace {

std::string formatBeats(const Beats& b) {
  if (b.denominator() == 1) return std::to_string(b.numerator());
  return std::to_string(b.numerator()) + "/" + std::to_string(b.denominator());
}

}  // namespace chordspace
