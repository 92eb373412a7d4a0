#pragma once

#include <stdexcept>
#include <string>

namespace atlab {

enum class Errc {
  NonPlanarEmbedding,
  MalformedRotation,
  DisconnectedWhenPlanarOpsRequested,
  OuterFaceInvalid,
  FaceIsOuter,
  CornerVertexNotOnNewBoundary,
  DualPathsNotDisjoint,
  TooLarge,
  SpecInvalid,
  NotOnBoundary,
  SetsNotDisjoint,
  InverseUndefined,
  PreconditionViolated,
  PatternMismatch,
  RegionViolation,
  NotASeparator,
  OddSet,
  OddDimension,
  NotSquare,
  BadInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case Errc::MalformedRotation: return "MalformedRotation";
    case Errc::DisconnectedWhenPlanarOpsRequested: return "DisconnectedWhenPlanarOpsRequested";
    case Errc::OuterFaceInvalid: return "OuterFaceInvalid";
    case Errc::FaceIsOuter: return "FaceIsOuter";
    case Errc::CornerVertexNotOnNewBoundary: return "CornerVertexNotOnNewBoundary";
    case Errc::DualPathsNotDisjoint: return "DualPathsNotDisjoint";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SpecInvalid: return "SpecInvalid";
    case Errc::NotOnBoundary: return "NotOnBoundary";
    case Errc::SetsNotDisjoint: return "SetsNotDisjoint";
    case Errc::InverseUndefined: return "InverseUndefined";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::PatternMismatch: return "PatternMismatch";
    case Errc::RegionViolation: return "RegionViolation";
    case Errc::NotASeparator: return "NotASeparator";
    case Errc::OddSet: return "OddSet";
    case Errc::OddDimension: return "OddDimension";
    case Errc::NotSquare: return "NotSquare";
    case Errc::BadInput: return "BadInput";
  }
  return "UnknownError";
}

/// All library failures are reported through this exception; code() lets
/// callers and tests dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, Errc c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace atlab
