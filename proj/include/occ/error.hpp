#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace occ {

// Every failure the library reports carries one of these kinds. The CLI maps
// kinds onto exit codes, so keep the two in sync (see cli.cpp).
enum class ErrorKind {
  // lattice
  NotUnimodular,
  // fan
  InvalidFan,
  NotSmooth,
  NotCalabiYau,
  NotAFlag,
  NoPositiveFunctional,
  // build
  InvalidBrane,
  BraneNotOuter,
  NotEffective,
  // symrat
  OrderTooSmall,
  PoleAtRestriction,
  NonHomogeneous,
  DivisionByZero,
  // graphs
  NoCertificate,
  // loc
  NonIntegerDegree,
  ZeroWeightSlot,
  NonGenericFraming,
  // gw
  NotTangent,
  // cli
  InvalidSpec,
};

std::string_view error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace occ
