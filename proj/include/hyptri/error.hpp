#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyptri {

enum class ErrorCode {
  ImaginaryOverflow,
  UndefinedOperation,
  IncomparableQuanta,
  UnsupportedConfiguration,
  ZeroVector,
  CoincidentArguments,
  IdenticalPoints,
  CoincidentLines,
  PointOnLine,
  CollinearPoints,
  OutOfDomain,
  DegenerateTriangle,
  OverflowRisk,
  MissingVertices,
  InconsistentCoords,
  NoSolution,
  CevianParallel,
  FootOutsideSegment,
  NonRealOrthocenter,
  OnSideLine,
  NoRootFound,
  ExhaustedAttempts,
  UnknownIdentity,
  IoFailure,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyptri
