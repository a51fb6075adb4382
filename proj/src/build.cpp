#include "occ/build.hpp"

#include <algorithm>

#include "occ/error.hpp"
#include "occ/graphs.hpp"

namespace occ {

Normalization normalize(const RawSpec& spec) {
  Fan raw(3, spec.rays, spec.cones);
  if (!raw.is_calabi_yau()) throw Error(ErrorKind::NotCalabiYau, "no covector is 1 on every ray");
  const BraneData& br = spec.brane;
  if (br.edge_rays.size() != 2 || br.edge_rays[0] == br.edge_rays[1])
    throw Error(ErrorKind::InvalidBrane, "brane edge needs two distinct rays");
  if (br.cone < 0 || br.cone >= (int)raw.cones().size()) throw Error(ErrorKind::InvalidBrane, "brane cone out of range");
  for (int r : br.edge_rays)
    if (r < 0 || r >= (int)raw.num_rays() || !raw.cone_contains(br.cone, r))
      throw Error(ErrorKind::InvalidBrane, "brane edge is not a face of the brane cone");
  int wall = raw.find_wall(br.edge_rays);
  if (raw.walls()[wall].compact()) throw Error(ErrorKind::BraneNotOuter, "brane edge is compact");

  int a = raw.opposite_ray(wall, br.cone);
  int i = br.edge_rays[0], j = br.edge_rays[1];
  if (determinant(IntMatrix::from_columns({raw.rays()[a], raw.rays()[i], raw.rays()[j]})) < 0) std::swap(i, j);

  Normalization out;
  out.f = br.framing;
  out.perm = {a, i, j};
  for (int r = 0; r < (int)raw.num_rays(); ++r)
    if (r != a && r != i && r != j) out.perm.push_back(r);
  std::vector<int> inv(raw.num_rays());
  for (std::size_t k = 0; k < out.perm.size(); ++k) inv[out.perm[k]] = (int)k;

  IntMatrix std_basis = IntMatrix::from_columns({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}});
  out.transform = std_basis * unimodular_change({raw.rays()[a], raw.rays()[i], raw.rays()[j]});

  std::vector<IntVec> rays;
  for (int r : out.perm) rays.push_back(out.transform * raw.rays()[r]);
  for (const auto& r : rays) {
    if (r[2] != 1) throw Error(ErrorKind::NotCalabiYau, "normalized ray off the height-one plane");
    if (r[0] < 0) throw Error(ErrorKind::BraneNotOuter, "a ray lies on the far side of the brane edge");
  }
  std::vector<std::vector<int>> cones;
  for (const auto& c : raw.cones()) {
    std::vector<int> nc;
    for (int r : c) nc.push_back(inv[r]);
    cones.push_back(nc);
  }
  out.X = Fan(3, rays, cones);
  out.sigma0 = br.cone;
  out.tau0 = out.X.find_wall({1, 2});
  kahler_certificate(out.X);
  return out;
}

GeometrySet build_geometry(const Normalization& norm) {
  GeometrySet g;
  g.norm = norm;
  g.f = norm.f;
  g.X = norm.X;
  g.R = (int)g.X.num_rays();
  g.sigma0 = norm.sigma0;
  g.tau0_X = norm.tau0;

  std::vector<IntVec> yr = g.X.rays();
  yr.push_back({-1, -g.f, 0});
  auto yc = g.X.cones();
  yc.push_back({1, 2, g.R});
  g.Y = Fan(3, yr, yc);
  g.sigma0_hat = (int)g.X.cones().size();
  g.tau0_Y = g.Y.find_wall({1, 2});
  if (!g.Y.walls()[g.tau0_Y].compact()) throw Error(ErrorKind::InvalidFan, "brane edge did not close up");

  std::vector<IntVec> xr;
  for (const auto& r : g.X.rays()) xr.push_back({r[0], r[1], r[2], 0});
  xr.push_back({-1, -g.f, 1, 1});
  xr.push_back({0, 0, 1, 1});
  std::vector<std::vector<int>> xc;
  for (auto c : yc) {
    c.push_back(g.R + 1);
    xc.push_back(c);
  }
  g.X4 = Fan(4, xr, xc);
  if (!g.X4.is_calabi_yau()) throw Error(ErrorKind::NotCalabiYau, "fourfold is not Calabi-Yau");

  g.wall_X_to_Y.clear();
  for (const auto& w : g.X.walls()) g.wall_X_to_Y.push_back(g.Y.find_wall(w.rays));
  g.wall_X4_to_Y.assign(g.X4.walls().size(), -1);
  for (const auto& w : g.Y.walls()) {
    auto r = w.rays;
    r.push_back(g.R + 1);
    int w4 = g.X4.find_wall(r);
    if (w4 < 0 || g.X4.walls()[w4].compact() != w.compact())
      throw Error(ErrorKind::InvalidFan, "walls of the threefold and fourfold do not match");
    g.wall_Y_to_X4.push_back(w4);
    g.wall_X4_to_Y[w4] = (int)g.wall_Y_to_X4.size() - 1;
  }
  if (g.X4.compact_walls().size() != g.Y.compact_walls().size())
    throw Error(ErrorKind::InvalidFan, "compact walls of the threefold and fourfold do not match");
  g.tau0_X4 = g.wall_Y_to_X4[g.tau0_Y];

  g.kappa_X = kahler_certificate(g.X);
  g.kappa_Y = kahler_certificate(g.Y);
  g.kappa_X4 = kahler_certificate(g.X4);

  auto facet = g.X4.cones()[g.sigma0_hat];
  facet.erase(std::find(facet.begin(), facet.end(), g.R));
  g.divisor_insertion = flag_weight(g.X4, g.X4.find_wall(facet), g.sigma0_hat, g.f);
  return g;
}

GeometrySet build_geometry(const RawSpec& spec) { return build_geometry(normalize(spec)); }

CurveClass class_X_to_Y(const GeometrySet& g, const CurveClass& beta_prime, const Int& d) {
  if (beta_prime.size() != g.X.num_rays()) throw Error(ErrorKind::InvalidSpec, "class has the wrong length");
  CurveClass out = beta_prime;
  out.push_back(0);
  auto l = wall_relation(g.Y, g.tau0_Y);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += d * l[i];
  return out;
}

CurveClass class_Y_to_X4(const GeometrySet& g, const CurveClass& beta_hat) {
  if (!is_effective(g.Y, beta_hat, g.kappa_Y))
    throw Error(ErrorKind::NotEffective, "class is not a non-negative combination of wall classes");
  CurveClass out = beta_hat;
  out.push_back(-beta_hat[g.R]);
  return out;
}

bool framing_is_generic(const GeometrySet& g) {
  for (int w : g.X.compact_walls())
    for (int c : g.X.walls()[w].cones) {
      LinForm l = flag_weight(g.X, w, c, g.f);
      if (l.a == 0 && l.c == 0) return false;
    }
  return true;
}

}  // namespace occ
