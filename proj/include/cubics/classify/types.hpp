#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubics/projective/line.hpp"
#include "cubics/projective/point.hpp"

namespace cubics {

/// Projective classification of nonzero ternary cubics: smooth, or one of
/// the eight singular normal-form orbits (each tag is one orbit family).
enum class CubicType {
  Elliptic,
  TripleLine,
  DoubleLinePlusLine,
  ThreeConcurrentLines,
  Triangle,
  ConicPlusTangentLine,
  ConicPlusSecantLine,
  CuspidalCubic,
  NodalCubic,
};

inline const char* to_string(CubicType t) {
  switch (t) {
    case CubicType::Elliptic: return "elliptic";
    case CubicType::TripleLine: return "triple-line";
    case CubicType::DoubleLinePlusLine: return "double-line-plus-line";
    case CubicType::ThreeConcurrentLines: return "three-concurrent-lines";
    case CubicType::Triangle: return "triangle";
    case CubicType::ConicPlusTangentLine: return "conic-plus-tangent";
    case CubicType::ConicPlusSecantLine: return "conic-plus-secant";
    case CubicType::CuspidalCubic: return "cuspidal";
    case CubicType::NodalCubic: return "nodal";
  }
  return "?";
}

/// Reducible cubics are exactly the types with one-dimensional flex locus.
inline bool is_reducible_type(CubicType t) {
  return t != CubicType::Elliptic && t != CubicType::CuspidalCubic && t != CubicType::NodalCubic;
}

/// The common zeros of the three partials. Either a finite point list or a
/// whole line (then the list is empty and the witness line is present).
struct SingularLocus {
  std::vector<PPoint<Eis>> points;
  bool infinite = false;
  std::optional<PLine<Eis>> witness_line;
};

}  // namespace cubics
