#pragma once

#include <array>
#include <cmath>
#include <numeric>

#include "chordspace/chord_class.h"

namespace chordspace {

/// A point in the 63-dimensional chord-class space, indexed by the
/// canonical class index.
using Vec63 = std::array<double, ChordClass::kCount>;

inline double dot(const Vec63& a, const Vec63& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

inline double norm(const Vec63& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Vec63& a, const Vec63& b) {
  double sum = 0.0;
  for (int i = 0; i < ChordClass::kCount; ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace chordspace
