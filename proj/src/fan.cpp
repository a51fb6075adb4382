#include "occ/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "occ/error.hpp"

namespace occ {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

IntMatrix cone_matrix(const Fan& fan, int cone) {
  std::vector<IntVec> cols;
  for (int r : fan.cones()[cone]) cols.push_back(fan.rays()[r]);
  return IntMatrix::from_columns(cols);
}

// Phase-one simplex with Bland's rule: a point x >= 0 with a x = b (b >= 0),
// or nullopt if none exists.
std::optional<std::vector<Rat>> feasible_point(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
  std::size_t m = a.size(), n = m ? a[0].size() : 0, cols = n + m;
  std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
    tab[i][n + i] = 1;
    tab[i][cols] = b[i];
    basis[i] = n + i;
  }
  // reduced costs of the phase-one objective (sum of artificials)
  std::vector<Rat> cost(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= n && j < cols) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= tab[i][j];
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rat ratio = tab[i][cols] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen for a phase-one problem
    Rat piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      Rat k = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= k * tab[leave][j];
    }
    if (cost[enter] != 0) {
      Rat k = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= k * tab[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return std::nullopt;
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = tab[i][cols];
  return x;
}

}  // namespace

Fan::Fan(int dim, std::vector<IntVec> rays, std::vector<std::vector<int>> cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(cones)) {
  if (dim_ != 3 && dim_ != 4) throw Error(ErrorKind::InvalidFan, "dimension must be 3 or 4");
  if (cones_.empty()) throw Error(ErrorKind::InvalidFan, "no maximal cones");
  std::set<IntVec> seen;
  for (const auto& r : rays_) {
    if ((int)r.size() != dim_) throw Error(ErrorKind::InvalidFan, "ray of wrong length");
    Int g = 0;
    for (const auto& x : r) g = gcd(g, x);
    if (g != 1) throw Error(ErrorKind::InvalidFan, "ray is not primitive");
    if (!seen.insert(r).second) throw Error(ErrorKind::InvalidFan, "repeated ray");
  }
  std::set<std::vector<int>> seen_cones;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto& cone = cones_[c];
    std::sort(cone.begin(), cone.end());
    if ((int)cone.size() != dim_) throw Error(ErrorKind::InvalidFan, "cone " + vec_str(cone) + " has wrong size");
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw Error(ErrorKind::InvalidFan, "cone " + vec_str(cone) + " repeats a ray");
    for (int r : cone)
      if (r < 0 || r >= (int)rays_.size()) throw Error(ErrorKind::InvalidFan, "ray index out of range");
    if (!seen_cones.insert(cone).second) throw Error(ErrorKind::InvalidFan, "repeated cone");
    Int det = determinant(cone_matrix(*this, (int)c));
    if (det != 1 && det != -1) throw Error(ErrorKind::NotSmooth, "cone " + vec_str(cone) + " has determinant " + det.get_str());
  }
  std::map<std::vector<int>, std::vector<int>> faces;
  for (std::size_t c = 0; c < cones_.size(); ++c)
    for (int drop = 0; drop < dim_; ++drop) {
      std::vector<int> w;
      for (int k = 0; k < dim_; ++k)
        if (k != drop) w.push_back(cones_[c][k]);
      faces[w].push_back((int)c);
    }
  for (auto& [rs, cs] : faces) {
    if (cs.size() > 2) throw Error(ErrorKind::InvalidFan, "wall " + vec_str(rs) + " lies in more than two cones");
    walls_.push_back({rs, cs});
  }
  // adjacent cones must lie on opposite sides of their common wall
  for (std::size_t w = 0; w < walls_.size(); ++w) {
    if (!walls_[w].compact()) continue;
    wall_relation(*this, (int)w);
  }
}

std::vector<int> Fan::compact_walls() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < walls_.size(); ++w)
    if (walls_[w].compact()) out.push_back((int)w);
  return out;
}

int Fan::find_wall(std::vector<int> rays) const {
  std::sort(rays.begin(), rays.end());
  for (std::size_t w = 0; w < walls_.size(); ++w)
    if (walls_[w].rays == rays) return (int)w;
  return -1;
}

int Fan::find_cone(std::vector<int> rays) const {
  std::sort(rays.begin(), rays.end());
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (cones_[c] == rays) return (int)c;
  return -1;
}

bool Fan::cone_contains(int cone, int ray) const {
  const auto& c = cones_[cone];
  return std::find(c.begin(), c.end(), ray) != c.end();
}

int Fan::opposite_ray(int wall, int cone) const {
  if (wall < 0 || wall >= (int)walls_.size() || cone < 0 || cone >= (int)cones_.size())
    throw Error(ErrorKind::NotAFlag, "index out of range");
  const auto& w = walls_[wall].rays;
  int out = -1;
  for (int r : cones_[cone]) {
    if (std::find(w.begin(), w.end(), r) != w.end()) continue;
    if (out >= 0) throw Error(ErrorKind::NotAFlag, "wall " + vec_str(w) + " is not a facet of cone " + vec_str(cones_[cone]));
    out = r;
  }
  for (int r : w)
    if (!cone_contains(cone, r))
      throw Error(ErrorKind::NotAFlag, "wall " + vec_str(w) + " is not a facet of cone " + vec_str(cones_[cone]));
  return out;
}

IntMatrix Fan::ray_matrix() const { return IntMatrix::from_columns(rays_); }

std::vector<IntVec> Fan::charge_vectors() const { return kernel_basis(ray_matrix()); }

bool Fan::is_calabi_yau() const {
  IntVec ones(rays_.size(), Int(1));
  return solve_in_lattice(ray_matrix().transpose(), ones).has_value();
}

IntVec Fan::dual_covector(int cone, int ray) const {
  std::vector<IntVec> cols;
  for (int r : cones_[cone]) cols.push_back(rays_[r]);
  // rows of the inverse are the dual basis
  IntMatrix inv = unimodular_change(cols);
  const auto& c = cones_[cone];
  auto pos = std::find(c.begin(), c.end(), ray) - c.begin();
  return inv.row((std::size_t)pos);
}

LinForm flag_weight(const Fan& fan, int wall, int cone, const Int& f) {
  int j = fan.opposite_ray(wall, cone);
  IntVec u = fan.dual_covector(cone, j);
  // drop u3, then u2 = f*u1 + s
  Int c = fan.dim() == 4 ? u[3] : Int(0);
  return {u[0] + u[1] * f, u[1], c};
}

FactoredRat vertex_weight(const Fan& fan, int cone, const Int& f) {
  FactoredRat r;
  for (std::size_t w = 0; w < fan.walls().size(); ++w) {
    const auto& cs = fan.walls()[w].cones;
    if (std::find(cs.begin(), cs.end(), cone) == cs.end()) continue;
    r.mul(flag_weight(fan, (int)w, cone, f), 1);
  }
  return r;
}

CurveClass wall_relation(const Fan& fan, int wall) {
  const Wall& w = fan.walls()[wall];
  if (!w.compact()) throw Error(ErrorKind::InvalidFan, "wall relation of a non-compact wall");
  int i3 = fan.opposite_ray(wall, w.cones[0]), i4 = fan.opposite_ray(wall, w.cones[1]);
  std::vector<IntVec> cols;
  for (int r : w.rays) cols.push_back(fan.rays()[r]);
  IntVec target(fan.dim());
  for (int k = 0; k < fan.dim(); ++k) target[k] = fan.rays()[i3][k] + fan.rays()[i4][k];
  auto alpha = solve_in_lattice(IntMatrix::from_columns(cols), target);
  if (!alpha) throw Error(ErrorKind::InvalidFan, "cones adjacent along " + vec_str(w.rays) + " overlap");
  CurveClass c(fan.num_rays(), Int(0));
  c[i3] = 1;
  c[i4] = 1;
  for (std::size_t k = 0; k < w.rays.size(); ++k) c[w.rays[k]] = -(*alpha)[k];
  return c;
}

Int KahlerCertificate::pair(const CurveClass& c) const {
  Rat s(0);
  for (std::size_t i = 0; i < c.size(); ++i) s += kappa[i] * c[i];
  if (s.get_den() != 1) throw Error(ErrorKind::NoCertificate, "class pairs to a non-integer");
  return s.get_num();
}

std::optional<std::vector<Rat>> positive_functional(const std::vector<CurveClass>& classes) {
  if (classes.empty()) return std::vector<Rat>{};
  std::size_t n = classes[0].size();
  // kappa = p - q; rows: c.(p - q) - slack = 1
  std::size_t m = classes.size(), vars = 2 * n + m;
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(vars));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      a[i][k] = Rat(classes[i][k]);
      a[i][n + k] = Rat(-classes[i][k]);
    }
    a[i][2 * n + i] = -1;
  }
  auto x = feasible_point(a, std::vector<Rat>(m, Rat(1)));
  if (!x) return std::nullopt;
  std::vector<Rat> kappa(n);
  for (std::size_t k = 0; k < n; ++k) kappa[k] = (*x)[k] - (*x)[n + k];
  return kappa;
}

KahlerCertificate kahler_certificate(const Fan& fan) {
  std::size_t n = fan.num_rays();
  auto compact = fan.compact_walls();
  KahlerCertificate cert;
  cert.kappa.assign(n, Rat(0));
  cert.wall_values.assign(fan.walls().size(), Int(0));
  if (compact.empty()) return cert;
  std::vector<CurveClass> classes;
  for (int w : compact) classes.push_back(wall_relation(fan, w));
  auto found = positive_functional(classes);
  if (!found) throw Error(ErrorKind::NoPositiveFunctional, "no functional is positive on all compact wall classes");
  std::vector<Rat> kappa = *found;
  std::size_t m = compact.size();
  std::vector<Rat> vals(m);
  Int den_lcm = 1, num_gcd = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) vals[i] += kappa[k] * classes[i][k];
    den_lcm = lcm(den_lcm, vals[i].get_den());
  }
  for (std::size_t i = 0; i < m; ++i) num_gcd = gcd(num_gcd, Rat(vals[i] * den_lcm).get_num());
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  for (auto& k : kappa) k *= scale;
  cert.kappa = kappa;
  for (std::size_t i = 0; i < m; ++i) cert.wall_values[compact[i]] = Rat(vals[i] * scale).get_num();
  return cert;
}

Int pair_with_divisor(const CurveClass& c, int ray) { return c.at((std::size_t)ray); }

bool in_kernel(const Fan& fan, const CurveClass& c) {
  if (c.size() != fan.num_rays()) return false;
  for (const auto& x : fan.ray_matrix() * c)
    if (x != 0) return false;
  return true;
}

}  // namespace occ
