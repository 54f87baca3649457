#pragma once

#include <stdexcept>
#include <string>

namespace chordspace {

/// Error categories surfaced by the library. The CLI maps these to exit
/// status 2 (data error); anything else is a usage or internal error.
enum class Errc {
  kUnparseableSymbol,   // no valid root letter in a chord symbol
  kUnknownQuality,      // root parsed but the remainder is unrecognized
  kIoError,             // file missing, unreadable, or corrupt
  kMalformedRecord,     // corpus record violates the JSONL schema
  kNonPitchedClass,     // NC / <START> / <END> where a pitched class is required
  kNoTonalContent,      // key estimation with an empty beat tally
  kMissingDeclaredKey,  // estimation evaluation needs a declared key per song
  kEmptyCorpus,
  kModelMismatch,       // paths built against different co-occurrence models
  kUnknownSong,
  kParameterOutOfRange,
  kZeroLengthPath,
};

const char* errcName(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace chordspace
