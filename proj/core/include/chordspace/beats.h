#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace chordspace {

/// Chord durations are exact rationals so that half-beat chords and long
/// accumulations stay drift-free. Converted to floating point only at the
/// geometry layer.
using Beats = boost::rational<std::int64_t>;

inline double toDouble(const Beats& b) {
  return static_cast<double>(b.numerator()) / static_cast<double>(b.denominator());
}

/// Renders "3" or "7/2".
std::string formatBeats(const Beats& b);

}  // namespace chordspace
