#pragma once

#include <utility>
#include <vector>

#include "occ/build.hpp"
#include "occ/loc.hpp"

namespace occ {

struct InvariantReport {
  CurveClass beta_prime;
  Int d;
  Rat disk, rel, cl0, cl1;
  bool open_relative = false;
  bool relative_local = false;
  bool divisor_relation = false;
  bool open_closed = false;

  bool all_pass() const { return open_relative && relative_local && divisor_relation && open_closed; }
};

// Sum of restricted contributions over the admitted graphs. Poles of single
// graphs are resolved in the sum; a pole of the sum is NonGenericFraming.
Rat sum_contributions(const GeometrySet& g, const Theory& th, const CurveClass& c);

Rat disk_invariant(const GeometrySet& g, const CurveClass& beta_prime, const Int& d);
Rat relative_invariant(const GeometrySet& g, const CurveClass& beta_hat);
Rat closed_invariant(const GeometrySet& g, const CurveClass& beta_tilde, int points);

InvariantReport verify(const GeometrySet& g, const CurveClass& beta_prime, const Int& d);

// Effective classes of X (including 0) with kappa value at most k, sorted.
std::vector<CurveClass> effective_classes(const GeometrySet& g, long k);

// All (beta', d), d >= 1, with kappa(beta') + d <= k.
std::vector<std::pair<CurveClass, Int>> classes_up_to(const GeometrySet& g, long k);

}  // namespace occ
