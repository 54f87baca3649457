#include "chordspace/errors.h"

namespace chordspace {

const char* errcName(Errc code) {
  switch (code) {
    case Errc::kUnparseableSymbol: return "UnparseableSymbol";
    case Errc::kUnknownQuality: return "UnknownQuality";
    case Errc::kIoError: return "IoError";
    case Errc::kMalformedRecord: return "MalformedRecord";
    case Errc::kNonPitchedClass: return "NonPitchedClass";
    case Errc::kNoTonalContent: return "NoTonalContent";
    case Errc::kMissingDeclaredKey: return "MissingDeclaredKey";
    case Errc::kEmptyCorpus: return "EmptyCorpus";
    case Errc::kModelMismatch: return "ModelMismatch";
    case Errc::kUnknownSong: return "UnknownSong";
    case Errc::kParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::kZeroLengthPath: return "ZeroLengthPath";
  }
  return "Error";
}

}  // namespace chordspace
