#pragma once

#include <stdexcept>
#include <string>

namespace ng3d {

enum class Errc {
  MissingFile,
  CorruptHeader,
  NonFiniteData,
  DimensionTooSmall,
  OddDimension,
  NegativeSigma,
  TooFewSubjects,
  VolumeTooSmall,
  BadShape,
  ChannelMismatch,
  BadInputRank,
  NonFiniteActivation,
  InputTooSmall,
  ZeroWeight,
  ShapeMismatch,
  SliceTooSmall,
  AllPlanesTooSmall,
  EmptyBatch,
  EmptyInput,
  DegenerateReference,
  NonFiniteGradient,
  NonFiniteLoss,
  IoFailure,
  VersionMismatch,
  SliceOutOfRange,
};

const char* errc_name(Errc c);

/// Exception carrying a stable error code; `what()` is "<code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace ng3d
