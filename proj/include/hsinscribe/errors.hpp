#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hs {

enum class Errc {
  ZeroVector,
  NotOnQuadric,
  OnLightCone,
  DegenerateInput,
  DuplicatePoint,
  FlatPolyhedron,
  NonExtremeVertex,
  StronglyIdeal,
  ClassificationMismatch,
  NormalNotSpacelike,
  AngleDomain,
  StructureViolation,
  InteriorConditionUnmet,
  TooLarge,
  InvalidCover,
  NotPolyhedral,
  NotAdmissible,
  InfeasibleInput,
  ApexConflict,
  CoincidentComplexPoints,
  NoIntersection,
  RedundantHorodisk,
  VerticesMerge,
  MalformedInput,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotOnQuadric: return "NotOnQuadric";
    case Errc::OnLightCone: return "OnLightCone";
    case Errc::DegenerateInput: return "DegenerateInput";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::FlatPolyhedron: return "FlatPolyhedron";
    case Errc::NonExtremeVertex: return "NonExtremeVertex";
    case Errc::StronglyIdeal: return "StronglyIdeal";
    case Errc::ClassificationMismatch: return "ClassificationMismatch";
    case Errc::NormalNotSpacelike: return "NormalNotSpacelike";
    case Errc::AngleDomain: return "AngleDomain";
    case Errc::StructureViolation: return "StructureViolation";
    case Errc::InteriorConditionUnmet: return "InteriorConditionUnmet";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidCover: return "InvalidCover";
    case Errc::NotPolyhedral: return "NotPolyhedral";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::InfeasibleInput: return "InfeasibleInput";
    case Errc::ApexConflict: return "ApexConflict";
    case Errc::CoincidentComplexPoints: return "CoincidentComplexPoints";
    case Errc::NoIntersection: return "NoIntersection";
    case Errc::RedundantHorodisk: return "RedundantHorodisk";
    case Errc::VerticesMerge: return "VerticesMerge";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hs
