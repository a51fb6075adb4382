#pragma once

#include <optional>
#include <vector>

#include "occ/lattice.hpp"
#include "occ/symrat.hpp"

namespace occ {

using CurveClass = IntVec;

struct Wall {
  std::vector<int> rays;  // sorted
  std::vector<int> cones; // one or two max cones
  bool compact() const { return cones.size() == 2; }
};

class Fan {
 public:
  Fan() = default;
  // Validates smoothness, primitivity and the wall structure.
  Fan(int dim, std::vector<IntVec> rays, std::vector<std::vector<int>> cones);

  int dim() const { return dim_; }
  std::size_t num_rays() const { return rays_.size(); }
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& cones() const { return cones_; }
  const std::vector<Wall>& walls() const { return walls_; }
  std::vector<int> compact_walls() const;

  // Index of the wall with exactly these rays, or -1.
  int find_wall(std::vector<int> rays) const;
  // Index of the cone with exactly these rays, or -1.
  int find_cone(std::vector<int> rays) const;
  bool cone_contains(int cone, int ray) const;
  // The ray of `cone` that is not in `wall`. NotAFlag if the wall is not a facet.
  int opposite_ray(int wall, int cone) const;

  // Columns are the rays.
  IntMatrix ray_matrix() const;
  std::vector<IntVec> charge_vectors() const;
  // True when some covector takes the value 1 on every ray.
  bool is_calabi_yau() const;

  // Dual basis covector of `cone` that is 1 on ray j and 0 on the other rays.
  IntVec dual_covector(int cone, int ray) const;

 private:
  int dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<std::vector<int>> cones_;
  std::vector<Wall> walls_;
};

// Tangent weight of the wall's line at the cone's fixed point, in (u1, s, t)
// with s = u2 - f*u1 and t = u4.
LinForm flag_weight(const Fan& fan, int wall, int cone, const Int& f);

// Product over the facets of the cone.
FactoredRat vertex_weight(const Fan& fan, int cone, const Int& f);

CurveClass wall_relation(const Fan& fan, int wall);

struct KahlerCertificate {
  std::vector<Rat> kappa;            // functional on Z^{#rays}
  std::vector<Int> wall_values;      // kappa on each wall (0 for non-compact)
  Int pair(const CurveClass& c) const;
};

// Some functional positive on every given class, or none. The empty list
// yields an empty functional.
std::optional<std::vector<Rat>> positive_functional(const std::vector<CurveClass>& classes);

// kappa with kappa . [l_tau] a positive integer on every compact wall, values
// with gcd 1. NoPositiveFunctional if none exists.
KahlerCertificate kahler_certificate(const Fan& fan);

Int pair_with_divisor(const CurveClass& c, int ray);

bool in_kernel(const Fan& fan, const CurveClass& c);

}  // namespace occ
