#pragma once

#include <stdexcept>
#include <string>

namespace orth {

// Error kinds used across the library.  Kept in one enum so the CLI can map
// them to diagnostics uniformly.
enum class Err {
  NonPlanarOrInconsistent,
  DegreeExceeded,
  SelfLoop,
  Disconnected,
  UnknownEdge,
  PositionsNotOnFace,
  NotACycle,
  NotSimple,
  WrongOrientation,
  NotIncident,
  NotAPath,
  InvalidReferencePath,
  CentralFaceStrictlyMonotone,
  RotationNonZero,
  NotOnOuterCycle,
  NotEssential,
  NotLocallyConsistent,
  TooLarge,
  NotRegular,
  NotACandidate,
  NotValid,
  NotRectangular,
  Infeasible,
  ParseError,
  ParamsOutOfRange,
  Internal,
};

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

const char* err_name(Err k);

// Provenance of vertices/edges, so drawings of augmented graphs can be
// projected back onto the original instance.
enum class Tag : unsigned char {
  Original,
  Subdivision,
  Augmentation,
  Preprocessing,
};

}  // namespace orth
