#include "occ/error.hpp"

namespace occ {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::NotCalabiYau: return "NotCalabiYau";
    case ErrorKind::NotAFlag: return "NotAFlag";
    case ErrorKind::NoPositiveFunctional: return "NoPositiveFunctional";
    case ErrorKind::InvalidBrane: return "InvalidBrane";
    case ErrorKind::BraneNotOuter: return "BraneNotOuter";
    case ErrorKind::NotEffective: return "NotEffective";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::PoleAtRestriction: return "PoleAtRestriction";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NoCertificate: return "NoCertificate";
    case ErrorKind::NonIntegerDegree: return "NonIntegerDegree";
    case ErrorKind::ZeroWeightSlot: return "ZeroWeightSlot";
    case ErrorKind::NonGenericFraming: return "NonGenericFraming";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace occ
