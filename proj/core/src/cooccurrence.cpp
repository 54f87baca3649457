#include "chordspace/cooccurrence.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "chordspace/errors.h"
#include "chordspace/pipeline.h"
#include "chordspace/song.h"

namespace chordspace {

namespace {

constexpr char kMagic[8] = {'C', 'H', 'S', 'P', 'C', 'O', 'O', 'C'};
constexpr std::uint32_t kFormatVersion = 1;

/// FNV-1a over the little-endian bytes of every count plus the corpus size.
std::uint64_t fingerprintOf(const CooccurrenceModel::CountMatrix& counts,
                            std::uint64_t corpus_size) {
  std::uint64_t hash = 14695981039346656037ull;
  const auto mix = [&hash](std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (value >> (8 * byte)) & 0xffu;
      hash *= 1099511628211ull;
    }
  };
  for (const auto& row : counts)
    for (std::uint64_t cell : row) mix(cell);
  mix(corpus_size);
  return hash;
}

/// Normalizes rows into embeddings, marks zero rows, stamps the fingerprint.
void finalizeModel(CooccurrenceModel& model) {
  for (int i = 0; i < ChordClass::kCount; ++i) {
    double sum_squares = 0.0;
    for (int j = 0; j < ChordClass::kCount; ++j) {
      const double value = static_cast<double>(model.counts[i][j]);
      model.embeddings[i][j] = value;
      sum_squares += value * value;
    }
    if (sum_squares == 0.0) {
      model.zero_row[i] = true;
      continue;
    }
    const double inverse_norm = 1.0 / std::sqrt(sum_squares);
    for (int j = 0; j < ChordClass::kCount; ++j)
      model.embeddings[i][j] *= inverse_norm;
  }
  model.fingerprint = fingerprintOf(model.counts, model.corpus_size);
}

void writeU32(std::ostream& out, std::uint32_t value) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xffu);
  out.write(bytes, sizeof bytes);
}

void writeU64(std::ostream& out, std::uint64_t value) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xffu);
  out.write(bytes, sizeof bytes);
}

std::uint32_t readU32(std::istream& in) {
  unsigned char bytes[4];
  in.read(reinterpret_cast<char*>(bytes), sizeof bytes);
  std::uint32_t value = 0;
  for (int i = 0; i < 4; ++i) value |= std::uint32_t(bytes[i]) << (8 * i);
  return value;
}

std::uint64_t readU64(std::istream& in) {
  unsigned char bytes[8];
  in.read(reinterpret_cast<char*>(bytes), sizeof bytes);
  std::uint64_t value = 0;
  for (int i = 0; i < 8; ++i) value |= std::uint64_t(bytes[i]) << (8 * i);
  return value;
}

}  // namespace

CooccurrenceModel buildModelFromSequences(
    const std::vector<ChordClassSequence>& sequences) {
  CooccurrenceModel model;
  model.corpus_size = sequences.size();

  std::vector<int> tokens;
  for (const ChordClassSequence& seq : sequences) {
    tokens.clear();
    tokens.reserve(seq.size() + 2);
    tokens.push_back(ChordClass::kStartIndex);
    for (ChordClass chord_class : seq.classes) tokens.push_back(chord_class.index());
    tokens.push_back(ChordClass::kEndIndex);

    // Symmetric window of size 1: each adjacency feeds both directed cells,
    // so a class repeated back to back adds 2 on the diagonal.
    for (std::size_t p = 0; p + 1 < tokens.size(); ++p) {
      ++model.counts[tokens[p]][tokens[p + 1]];
      ++model.counts[tokens[p + 1]][tokens[p]];
    }
  }
  finalizeModel(model);
  return model;
}

CooccurrenceModel buildModel(const Corpus& corpus) {
  if (corpus.songs.empty())
    throw Error(Errc::kEmptyCorpus, "cannot build a model from an empty corpus");

  std::vector<ChordClassSequence> sequences;
  sequences.reserve(corpus.songs.size());
  for (NormalizedSong& song : normalizeCorpus(corpus))
    sequences.push_back(std::move(song.sequence));
  return buildModelFromSequences(sequences);
}

double cosineSimilarity(const CooccurrenceModel& model, ChordClass i, ChordClass j) {
  if (model.isZeroRow(i) || model.isZeroRow(j)) return 0.0;
  if (i == j) return 1.0;
  return dot(model.embedding(i), model.embedding(j));
}

std::vector<ClassSimilarity> nearestClasses(const CooccurrenceModel& model,
                                            ChordClass query, int k) {
  if (k < 1) {
    throw Error(Errc::kParameterOutOfRange,
                "nearest-class count must be at least 1, got " + std::to_string(k));
  }
  std::vector<ClassSimilarity> ranked;
  ranked.reserve(ChordClass::kCount);
  for (int index = 0; index < ChordClass::kCount; ++index) {
    const ChordClass candidate = ChordClass::fromIndex(index);
    if (model.isZeroRow(candidate)) continue;
    ranked.push_back({candidate, cosineSimilarity(model, query, candidate)});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const ClassSimilarity& a, const ClassSimilarity& b) {
              if (a.similarity != b.similarity) return a.similarity > b.similarity;
              return a.chord_class.index() < b.chord_class.index();
            });
  if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(k);
  return ranked;
}

void saveModel(const CooccurrenceModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(Errc::kIoError, "cannot write model file '" + path.string() + "'");

  out.write(kMagic, sizeof kMagic);
  writeU32(out, kFormatVersion);
  for (const auto& row : model.counts)
    for (std::uint64_t cell : row) writeU64(out, cell);
  writeU64(out, model.corpus_size);
  if (!out)
    throw Error(Errc::kIoError, "short write to model file '" + path.string() + "'");
}

CooccurrenceModel loadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::kIoError, "cannot open model file '" + path.string() + "'");

  char magic[8];
  in.read(magic, sizeof magic);
  if (!in || !std::equal(magic, magic + sizeof magic, kMagic)) {
    throw Error(Errc::kModelMismatch,
                "'" + path.string() + "' is not a chordspace model file");
  }
  const std::uint32_t version = readU32(in);
  if (!in || version != kFormatVersion) {
    throw Error(Errc::kModelMismatch,
                "unsupported model version " + std::to_string(version) +
                    " in '" + path.string() + "'");
  }

  CooccurrenceModel model;
  for (auto& row : model.counts)
    for (std::uint64_t& cell : row) cell = readU64(in);
  model.corpus_size = readU64(in);
  if (!in)
    throw Error(Errc::kIoError, "truncated model file '" + path.string() + "'");

  for (int i = 0; i < ChordClass::kCount; ++i) {
    for (int j = i + 1; j < ChordClass::kCount; ++j) {
      if (model.counts[i][j] != model.counts[j][i]) {
        throw Error(Errc::kModelMismatch,
                    "corrupt model '" + path.string() + "': counts not symmetric");
      }
    }
  }

  finalizeModel(model);
  return model;
}

}  // namespace chordspace
