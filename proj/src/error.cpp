#include "sgfb/error.hpp"

namespace sgfb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::ConnectivityFailure: return "ConnectivityFailure";
    case ErrorCode::EigensolverFailure: return "EigensolverFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::UnequalHalves: return "UnequalHalves";
    case ErrorCode::SingularComplementBlock: return "SingularComplementBlock";
    case ErrorCode::RangeOutOfSpectrum: return "RangeOutOfSpectrum";
    case ErrorCode::EmptyCluster: return "EmptyCluster";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace sgfb
