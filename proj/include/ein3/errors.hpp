#pragma once

#include <stdexcept>
#include <string>

namespace ein {

enum class Err {
  NotSpacelike,
  BadWingData,
  NotConsistentlyOriented,
  NotAllowable,
  AtInfinity,
  SamePoint,
  IncidentPoints,
  DegenerateData,
  ResolutionTooSmall,
  NotLorentz,
  NotInGroup,
  NotHyperbolic,
  NotPaired,
  EmptySequence,
  UngluedMesh,
  IrrationalFrame,
  BadInput,
};

const char* err_name(Err e);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace ein
