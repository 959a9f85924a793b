#include "gelement/error.hpp"

namespace gelement {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::not_a_matroid: return "NotAMatroid";
    case ErrorKind::empty_family: return "EmptyFamily";
    case ErrorKind::has_loops: return "HasLoops";
    case ErrorKind::has_coloops: return "HasColoops";
    case ErrorKind::invalid_degree: return "InvalidDegree";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::not_an_lsop: return "NotAnLsop";
    case ErrorKind::lsop_not_found: return "LsopNotFound";
    case ErrorKind::witness_not_found: return "WitnessNotFound";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::too_large: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace gelement
