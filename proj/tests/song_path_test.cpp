#include "chordspace/song_path.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "chordspace/chord_class.h"
#include "chordspace/cooccurrence.h"
#include "chordspace/errors.h"

namespace chordspace {
namespace {

constexpr ChordClass M(int root) {
  return ChordClass::pitched(ChordType::kMajor7, PitchClass(root));
}
constexpr ChordClass m(int root) {
  return ChordClass::pitched(ChordType::kMinor7, PitchClass(root));
}
constexpr ChordClass dom(int root) {
  return ChordClass::pitched(ChordType::kDominant7, PitchClass(root));
}

ChordClassSequence sequenceOf(std::vector<ChordClass> classes, std::vector<Beats> beats) {
  ChordClassSequence seq;
  seq.song_id = "test";
  seq.classes = std::move(classes);
  seq.beats = std::move(beats);
  return seq;
}

/// ii-V-I model: nonzero rows for m(D), 7(G), M(C), <START>, <END>.
const CooccurrenceModel& tinyModel() {
  static const CooccurrenceModel model = buildModelFromSequences(
      {sequenceOf({m(2), dom(7), M(0)}, {Beats(1), Beats(1), Beats(1)})});
  return model;
}

// ---------------------------------------------------------------------------
// construction

TEST(SongPath, SingleChordWorkedExample) {
  // One chord of 4 beats, boundary tokens 1 beat each: total 6, knots at the
  // sixths.
  const auto seq = sequenceOf({m(2)}, {Beats(4)});
  const SongPath path = buildPath(seq, tinyModel(), Beats(1));

  EXPECT_EQ(path.segments(), 3u);
  EXPECT_EQ(path.total_beats, Beats(6));
  ASSERT_EQ(path.vertices.size(), 4u);
  ASSERT_EQ(path.knots.size(), 4u);

  EXPECT_EQ(path.knots[0], 0.0);
  EXPECT_DOUBLE_EQ(path.knots[1], 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(path.knots[2], 5.0 / 6.0);
  EXPECT_EQ(path.knots[3], 1.0);

  for (double coordinate : path.vertices[0]) EXPECT_EQ(coordinate, 0.0);
  const Vec63& start_embedding = tinyModel().embedding(ChordClass::start());
  const Vec63& chord_embedding = tinyModel().embedding(m(2));
  for (int j = 0; j < 63; ++j) {
    EXPECT_EQ(path.vertices[1][j], start_embedding[j]);
    EXPECT_EQ(path.vertices[2][j], path.vertices[1][j] + 4.0 * chord_embedding[j]);
  }

  EXPECT_EQ(path.model_fingerprint, tinyModel().fingerprint);
}

TEST(SongPath, SegmentLengthsEqualBeatsForUnitEmbeddings) {
  const auto seq = sequenceOf({m(2), dom(7), M(0)}, {Beats(4), Beats(2), Beats(7, 2)});
  const SongPath path = buildPath(seq, tinyModel(), Beats(1));

  ASSERT_EQ(path.segments(), 5u);
  const double expected[] = {1.0, 4.0, 2.0, 3.5, 1.0};
  for (std::size_t s = 0; s < 5; ++s) {
    EXPECT_NEAR(distance(path.vertices[s], path.vertices[s + 1]), expected[s], 1e-9)
        << "segment " << s;
  }
}

TEST(SongPath, UnobservedClassStallsThePath) {
  // dim(F) has an all-zero row in this model, so its segment goes nowhere
  // while the knot still advances.
  const ChordClass unseen = ChordClass::pitched(ChordType::kDiminished7, PitchClass(5));
  const auto seq = sequenceOf({m(2), unseen, M(0)}, {Beats(2), Beats(2), Beats(2)});
  const SongPath path = buildPath(seq, tinyModel(), Beats(1));

  ASSERT_TRUE(tinyModel().isZeroRow(unseen));
  EXPECT_EQ(distance(path.vertices[2], path.vertices[3]), 0.0);
  EXPECT_LT(path.knots[2], path.knots[3]);
}

TEST(SongPath, KnotsAreExactAndStrictlyIncreasing) {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> length(1, 16);
  std::uniform_int_distribution<int> klass(0, ChordClass::kNoChordIndex);
  std::uniform_int_distribution<int> num(1, 8);
  std::uniform_int_distribution<int> den(1, 4);

  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ChordClass> classes;
    std::vector<Beats> beats;
    for (int i = 0, n = length(rng); i < n; ++i) {
      classes.push_back(ChordClass::fromIndex(klass(rng)));
      beats.push_back(Beats(num(rng), den(rng)));
    }
    const SongPath path =
        buildPath(sequenceOf(std::move(classes), std::move(beats)), tinyModel());

    ASSERT_EQ(path.knots.size(), path.vertices.size());
    EXPECT_EQ(path.knots.front(), 0.0);
    EXPECT_EQ(path.knots.back(), 1.0);  // rational accumulation, no drift
    for (std::size_t i = 1; i < path.knots.size(); ++i)
      ASSERT_LT(path.knots[i - 1], path.knots[i]);
  }
}

TEST(SongPath, BoundaryBeatsMustBePositive) {
  const auto seq = sequenceOf({m(2)}, {Beats(4)});
  for (const Beats& bad : {Beats(0), Beats(-1)}) {
    try {
      buildPath(seq, tinyModel(), bad);
      FAIL();
    } catch (const Error& error) {
      EXPECT_EQ(error.code(), Errc::kParameterOutOfRange);
    }
  }
}

TEST(SongPath, ZeroTotalDurationIsRejected) {
  // Only reachable with hand-built sequences; corpus durations are positive.
  const auto seq = sequenceOf({m(2)}, {Beats(-2)});
  try {
    buildPath(seq, tinyModel(), Beats(1));
    FAIL();
  } catch (const Error& error) {
    EXPECT_EQ(error.code(), Errc::kZeroLengthPath);
  }
}

// ---------------------------------------------------------------------------
// evaluation

TEST(SongPath, EvalEndpointsAndKnots) {
  const auto seq = sequenceOf({m(2), dom(7)}, {Beats(4), Beats(2)});
  const SongPath path = buildPath(seq, tinyModel(), Beats(1));

  const Vec63 at_zero = evalPath(path, 0.0);
  for (double coordinate : at_zero) EXPECT_EQ(coordinate, 0.0);

  const Vec63 at_one = evalPath(path, 1.0);
  for (int j = 0; j < 63; ++j) EXPECT_EQ(at_one[j], path.vertices.back()[j]);

  // Evaluating exactly at a knot returns that vertex.
  for (std::size_t v = 0; v < path.vertices.size(); ++v) {
    const Vec63 at_knot = evalPath(path, path.knots[v]);
    for (int j = 0; j < 63; ++j)
      ASSERT_EQ(at_knot[j], path.vertices[v][j]) << "vertex " << v;
  }
}

TEST(SongPath, EvalIsAffineBetweenKnots) {
  const auto seq = sequenceOf({m(2), dom(7), M(0)}, {Beats(3), Beats(1), Beats(2)});
  const SongPath path = buildPath(seq, tinyModel(), Beats(1));

  for (std::size_t v = 0; v + 1 < path.vertices.size(); ++v) {
    const double mid = 0.5 * (path.knots[v] + path.knots[v + 1]);
    const Vec63 at_mid = evalPath(path, mid);
    for (int j = 0; j < 63; ++j) {
      EXPECT_NEAR(at_mid[j], 0.5 * (path.vertices[v][j] + path.vertices[v + 1][j]),
                  1e-12);
    }
  }
}

TEST(SongPath, EvalRejectsOutOfRangeParameters) {
  const SongPath path = buildPath(sequenceOf({m(2)}, {Beats(4)}), tinyModel());
  for (double t : {-0.01, 1.01, -1e9}) {
    try {
      evalPath(path, t);
      FAIL() << t;
    } catch (const Error& error) {
      EXPECT_EQ(error.code(), Errc::kParameterOutOfRange);
    }
  }
}

}  // namespace
}  // namespace chordspace
