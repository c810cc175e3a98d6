#include "ng3d/errors.hpp"

namespace ng3d {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingFile: return "MissingFile";
    case Errc::CorruptHeader: return "CorruptHeader";
    case Errc::NonFiniteData: return "NonFiniteData";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::OddDimension: return "OddDimension";
    case Errc::NegativeSigma: return "NegativeSigma";
    case Errc::TooFewSubjects: return "TooFewSubjects";
    case Errc::VolumeTooSmall: return "VolumeTooSmall";
    case Errc::BadShape: return "BadShape";
    case Errc::ChannelMismatch: return "ChannelMismatch";
    case Errc::BadInputRank: return "BadInputRank";
    case Errc::NonFiniteActivation: return "NonFiniteActivation";
    case Errc::InputTooSmall: return "InputTooSmall";
    case Errc::ZeroWeight: return "ZeroWeight";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SliceTooSmall: return "SliceTooSmall";
    case Errc::AllPlanesTooSmall: return "AllPlanesTooSmall";
    case Errc::EmptyBatch: return "EmptyBatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::DegenerateReference: return "DegenerateReference";
    case Errc::NonFiniteGradient: return "NonFiniteGradient";
    case Errc::NonFiniteLoss: return "NonFiniteLoss";
    case Errc::IoFailure: return "IoFailure";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::SliceOutOfRange: return "SliceOutOfRange";
  }
  return "UnknownError";
}

}  // namespace ng3d
