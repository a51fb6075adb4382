#pragma once

#include <vector>

#include "occ/fan.hpp"

namespace occ {

struct BraneData {
  std::vector<int> edge_rays;  // the two rays of tau0
  int cone = -1;               // sigma0
  Int framing = 0;
};

struct RawSpec {
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> cones;
  BraneData brane;
};

struct Normalization {
  Fan X;
  std::vector<int> perm;  // perm[new ray] = input ray
  IntMatrix transform;    // applied to every input ray
  int sigma0 = -1;        // cone of X with rays {0,1,2}
  int tau0 = -1;          // wall {1,2} of X
  Int f;
};

// Reorders rays so sigma0 = {0,1,2}, tau0 = {1,2} with det[b0,b1,b2] = +1 in
// input coordinates, then moves b0,b1,b2 to (1,0,1),(0,1,1),(0,0,1).
Normalization normalize(const RawSpec& spec);

struct GeometrySet {
  Int f;
  Fan X, Y, X4;
  KahlerCertificate kappa_X, kappa_Y, kappa_X4;
  int R = 0;                // index of the divisor ray in Y; X4 adds R and R+1
  int sigma0 = -1;          // in X, Y and X4 (cone indices are shared)
  int sigma0_hat = -1;      // the added cone of Y, and its image in X4
  int tau0_X = -1, tau0_Y = -1, tau0_X4 = -1;
  std::vector<int> wall_Y_to_X4;  // iota on walls
  std::vector<int> wall_X_to_Y;   // X walls sit inside Y
  std::vector<int> wall_X4_to_Y;  // -1 off the image of iota
  // Restriction of the class of the divisor ray R of X4 to the fixed point of
  // iota(sigma0_hat); it vanishes at every other fixed point.
  LinForm divisor_insertion;
  Normalization norm;
};

GeometrySet build_geometry(const Normalization& norm);
GeometrySet build_geometry(const RawSpec& spec);

// False when the tangent weight of some compact line of X at one of its fixed
// points is a multiple of s alone. Single graph contributions can then have
// poles at the restriction, which only cancel in sums.
bool framing_is_generic(const GeometrySet& g);

CurveClass class_X_to_Y(const GeometrySet& g, const CurveClass& beta_prime, const Int& d);
// NotEffective unless beta_hat is a non-negative combination of Y wall classes.
CurveClass class_Y_to_X4(const GeometrySet& g, const CurveClass& beta_hat);

}  // namespace occ
