#include "chordspace/corpus_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>

#include "chordspace/errors.h"

namespace chordspace {
namespace {

std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(CHORDSPACE_FIXTURE_DIR) / name;
}

void expectReadError(const std::string& jsonl, Errc code,
                     const std::string& message_fragment) {
  std::istringstream in(jsonl);
  try {
    readCorpus(in, "corpus");
    FAIL() << "expected rejection: " << jsonl;
  } catch (const Error& error) {
    EXPECT_EQ(error.code(), code) << error.what();
    EXPECT_NE(std::string(error.what()).find(message_fragment), std::string::npos)
        << error.what();
  }
}

const char* kValidLine =
    R"({"id":"a","title":"A","key_signature":0,"beats_per_measure":4,"chords":[["CM7",4,1]]})";

// ---------------------------------------------------------------------------
// loading

TEST(CorpusIo, LoadsTheFixtureCorpus) {
  const Corpus corpus = loadCorpus(fixture("tiny.jsonl"));
  ASSERT_EQ(corpus.size(), 5u);

  const Song& first = corpus.songs.front();
  EXPECT_EQ(first.id, "blue-groove");
  EXPECT_EQ(first.title, "Blue Groove");
  ASSERT_TRUE(first.declared_key.has_value());
  EXPECT_EQ(first.declared_key->accidentals, 0);
  EXPECT_EQ(first.beats_per_measure, 4);
  ASSERT_EQ(first.events.size(), 3u);
  EXPECT_EQ(first.events[0].chord.family, ChordFamily::kMinor7);
  EXPECT_EQ(first.totalBeats(), Beats(16));

  EXPECT_FALSE(corpus.songs[2].declared_key.has_value());
  // Rational durations survive exactly: 7/2 beats.
  EXPECT_EQ(corpus.songs[3].events[4].beats, Beats(7, 2));
  EXPECT_EQ(corpus.songs[4].beats_per_measure, 3);

  EXPECT_NE(corpus.findSong("edge-case"), nullptr);
  EXPECT_EQ(corpus.findSong("nope"), nullptr);
}

TEST(CorpusIo, EmptyAndBlankLinesAreFine) {
  std::istringstream empty("");
  EXPECT_EQ(readCorpus(empty).size(), 0u);

  std::istringstream blanks(std::string("\n  \n") + kValidLine + "\n\n");
  EXPECT_EQ(readCorpus(blanks).size(), 1u);
}

TEST(CorpusIo, MissingFileIsAnIoError) {
  try {
    loadCorpus(fixture("does-not-exist.jsonl"));
    FAIL();
  } catch (const Error& error) {
    EXPECT_EQ(error.code(), Errc::kIoError);
  }
}

// ---------------------------------------------------------------------------
// validation

TEST(CorpusIo, RejectsMalformedRecords) {
  expectReadError("not json\n", Errc::kMalformedRecord, "corpus:1");
  expectReadError("[1,2,3]\n", Errc::kMalformedRecord, "not a JSON object");
  expectReadError(R"({"id":"a"})", Errc::kMalformedRecord, "missing field");
  expectReadError(
      R"({"id":"","title":"","key_signature":0,"beats_per_measure":4,"chords":[["C",1,1]]})",
      Errc::kMalformedRecord, "'id'");
  expectReadError(
      R"({"id":"a","title":"A","key_signature":9,"beats_per_measure":4,"chords":[["C",1,1]]})",
      Errc::kMalformedRecord, "key_signature");
  expectReadError(
      R"({"id":"a","title":"A","key_signature":"C","beats_per_measure":4,"chords":[["C",1,1]]})",
      Errc::kMalformedRecord, "key_signature");
  expectReadError(
      R"({"id":"a","title":"A","key_signature":0,"beats_per_measure":0,"chords":[["C",1,1]]})",
      Errc::kMalformedRecord, "beats_per_measure");
  expectReadError(
      R"({"id":"a","title":"A","key_signature":0,"beats_per_measure":4,"chords":[]})",
      Errc::kMalformedRecord, "chords");
  expectReadError(
      R"({"id":"a","title":"A","key_signature":0,"beats_per_measure":4,"chords":[["C",1]]})",
      Errc::kMalformedRecord, "symbol, beats_num, beats_den");
  expectReadError(
      R"({"id":"a","title":"A","key_signature":0,"beats_per_measure":4,"chords":[["C",0,1]]})",
      Errc::kMalformedRecord, "positive");
  expectReadError(
      R"({"id":"a","title":"A","key_signature":0,"beats_per_measure":4,"chords":[["C",1,-2]]})",
      Errc::kMalformedRecord, "positive");
}

TEST(CorpusIo, ErrorsCarryTheLineNumber) {
  const std::string two_lines = std::string(kValidLine) + "\n{bad json}\n";
  expectReadError(two_lines, Errc::kMalformedRecord, "corpus:2");
}

TEST(CorpusIo, RejectsDuplicateIds) {
  const std::string twice = std::string(kValidLine) + "\n" + kValidLine + "\n";
  expectReadError(twice, Errc::kMalformedRecord, "duplicate song id 'a'");
}

TEST(CorpusIo, ChordSymbolErrorsKeepTheirCodeAndLocation) {
  expectReadError(
      R"({"id":"a","title":"A","key_signature":0,"beats_per_measure":4,"chords":[["Xyz7",1,1]]})",
      Errc::kUnparseableSymbol, "corpus:1");
  expectReadError(
      R"({"id":"a","title":"A","key_signature":0,"beats_per_measure":4,"chords":[["Cfoo",1,1]]})",
      Errc::kUnknownQuality, "Cfoo");
}

// ---------------------------------------------------------------------------
// statistics

TEST(CorpusIo, FixtureCategoryHistogram) {
  const CategoryHistogram histogram = corpusStats(loadCorpus(fixture("tiny.jsonl")));
  EXPECT_EQ(histogram.total, 16u);
  EXPECT_EQ(histogram.counts[static_cast<int>(Table1Category::kMajor7)], 5u);
  EXPECT_EQ(histogram.counts[static_cast<int>(Table1Category::kDominant7)], 5u);
  EXPECT_EQ(histogram.counts[static_cast<int>(Table1Category::kMinor7)], 3u);
  EXPECT_EQ(histogram.counts[static_cast<int>(Table1Category::kSlashChord)], 1u);
  EXPECT_EQ(histogram.counts[static_cast<int>(Table1Category::kSusChord)], 1u);
  EXPECT_EQ(histogram.counts[static_cast<int>(Table1Category::kNoChord)], 1u);

  std::size_t sum = 0;
  double percent_sum = 0.0;
  for (int category = 0; category < kTable1CategoryCount; ++category) {
    sum += histogram.counts[category];
    percent_sum += histogram.percentage(static_cast<Table1Category>(category));
  }
  EXPECT_EQ(sum, histogram.total);
  EXPECT_NEAR(percent_sum, 100.0, 1e-9);
  EXPECT_DOUBLE_EQ(histogram.percentage(Table1Category::kMajor7), 31.25);
}

TEST(CorpusIo, EmptyCorpusStats) {
  const CategoryHistogram histogram = corpusStats(Corpus{});
  EXPECT_EQ(histogram.total, 0u);
  EXPECT_EQ(histogram.percentage(Table1Category::kMajor7), 0.0);
}

}  // namespace
}  // namespace chordspace
