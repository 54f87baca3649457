#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include "chordspace/chord_class.h"
#include "chordspace/vec63.h"

namespace chordspace {

struct Corpus;

/// Symmetric co-occurrence counts over the 63 chord classes, with the
/// L2-normalized rows used as class embeddings.
struct CooccurrenceModel {
  using CountMatrix =
      std::array<std::array<std::uint64_t, ChordClass::kCount>, ChordClass::kCount>;

  CountMatrix counts{};                        // counts[i][j] == counts[j][i]
  std::uint64_t corpus_size = 0;               // D
  std::array<Vec63, ChordClass::kCount> embeddings{};  // unit rows; zero rows stay zero
  std::array<bool, ChordClass::kCount> zero_row{};     // classes never observed
  std::uint64_t fingerprint = 0;               // derived from counts + D

  std::uint64_t count(ChordClass i, ChordClass j) const {
    return counts[i.index()][j.index()];
  }
  bool isZeroRow(ChordClass c) const { return zero_row[c.index()]; }
  const Vec63& embedding(ChordClass c) const { return embeddings[c.index()]; }
};

/// Runs the full pipeline (reduction, key estimation, transposition) over
/// the corpus, then tallies adjacencies with a symmetric context window of
/// size 1. Each song contributes the token stream
/// <START>, s_1, ..., s_N, <END>; every adjacent pair increments both
/// symmetric cells, so a repeated class adds 2 to its diagonal cell.
/// Throws Error{kEmptyCorpus} on an empty corpus.
CooccurrenceModel buildModel(const Corpus& corpus);

/// Same counting over already reduced-and-transposed sequences.
CooccurrenceModel buildModelFromSequences(const std::vector<ChordClassSequence>& sequences);

/// Cosine of the two class embeddings: 1.0 for a class with itself, 0.0 when
/// either row is all-zero, and within [0, 1] otherwise (counts are
/// non-negative).
double cosineSimilarity(const CooccurrenceModel& model, ChordClass i, ChordClass j);

struct ClassSimilarity {
  ChordClass chord_class;
  double similarity;
};

/// Top-k classes by descending cosine similarity, query included. Ties break
/// on the canonical class index; all-zero rows are excluded as candidates.
std::vector<ClassSimilarity> nearestClasses(const CooccurrenceModel& model,
                                            ChordClass query, int k);

/// Binary model file: 8-byte magic, u32 version, 63x63 row-major u64 counts,
/// u64 song count D. Little-endian throughout.
void saveModel(const CooccurrenceModel& model, const std::filesystem::path& path);
CooccurrenceModel loadModel(const std::filesystem::path& path);

}  // namespace chordspace
