#include "occ/gw.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "occ/error.hpp"

namespace occ {

Rat sum_contributions(const GeometrySet& g, const Theory& th, const CurveClass& c) {
  Localizer loc(g, th);
  std::vector<FactoredRat> terms;
  for (const auto& e : admitted_graphs(g, th, c)) terms.push_back(loc.contribution(e.graph, e.aut));
  Rat total(0);
  try {
    for (const auto& t : terms) total += restrict(t);
    return total;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::PoleAtRestriction) throw;
  }
  // Single graphs have poles; they may still cancel in the sum.
  RestrictedSum sum;
  for (const auto& t : terms) sum.add(t);
  try {
    return sum.value();
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::PoleAtRestriction) throw;
    throw Error(ErrorKind::NonGenericFraming, std::string("framing is not generic for this class: ") + err.what());
  }
}

Rat disk_invariant(const GeometrySet& g, const CurveClass& beta_prime, const Int& d) {
  if (d < 1) throw Error(ErrorKind::InvalidSpec, "winding must be positive");
  if (!in_kernel(g.X, beta_prime)) throw Error(ErrorKind::InvalidSpec, "not a curve class of X");
  if (!is_effective(g.X, beta_prime, g.kappa_X)) throw Error(ErrorKind::NotEffective, "class is not effective in X");
  return sum_contributions(g, Theory::open(d), beta_prime);
}

Rat relative_invariant(const GeometrySet& g, const CurveClass& beta_hat) {
  if (!in_kernel(g.Y, beta_hat)) throw Error(ErrorKind::InvalidSpec, "not a curve class of Y");
  if (pair_with_divisor(beta_hat, g.R) <= 0) throw Error(ErrorKind::NotTangent, "class does not meet the divisor");
  if (!is_effective(g.Y, beta_hat, g.kappa_Y)) throw Error(ErrorKind::NotEffective, "class is not effective in Y");
  return sum_contributions(g, Theory::log(), beta_hat);
}

Rat closed_invariant(const GeometrySet& g, const CurveClass& beta_tilde, int points) {
  if (!in_kernel(g.X4, beta_tilde)) throw Error(ErrorKind::InvalidSpec, "not a curve class of the fourfold");
  bool zero = true;
  for (const auto& x : beta_tilde) zero = zero && x == 0;
  if (zero || !is_effective(g.X4, beta_tilde, g.kappa_X4))
    throw Error(ErrorKind::NotEffective, "class is not a non-zero effective class of the fourfold");
  return sum_contributions(g, Theory::closed(points), beta_tilde);
}

InvariantReport verify(const GeometrySet& g, const CurveClass& beta_prime, const Int& d) {
  InvariantReport r;
  r.beta_prime = beta_prime;
  r.d = d;
  r.disk = disk_invariant(g, beta_prime, d);
  CurveClass bh = class_X_to_Y(g, beta_prime, d);
  r.rel = relative_invariant(g, bh);
  CurveClass bt = class_Y_to_X4(g, bh);
  r.cl0 = closed_invariant(g, bt, 0);
  r.cl1 = closed_invariant(g, bt, 1);
  Rat sign(d % 2 == 0 ? -1 : 1);  // (-1)^{d+1}
  Rat dd(d);
  r.open_relative = r.disk == sign * r.rel;
  r.relative_local = r.rel == sign * dd * r.cl0 && r.rel == sign * r.cl1;
  r.divisor_relation = r.cl1 == dd * r.cl0;
  r.open_closed = r.disk == dd * r.cl0 && r.disk == r.cl1;
  return r;
}

std::vector<CurveClass> effective_classes(const GeometrySet& g, long k) {
  auto compact = g.X.compact_walls();
  std::vector<CurveClass> classes;
  for (int w : compact) classes.push_back(wall_relation(g.X, w));
  std::set<CurveClass> out;
  CurveClass cur(g.X.num_rays(), Int(0));
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == compact.size()) {
      out.insert(cur);
      return;
    }
    long kv = g.kappa_X.wall_values[compact[i]].get_si();
    long n = 0;
    for (; n * kv <= left; ++n) {
      rec(i + 1, left - n * kv);
      for (std::size_t j = 0; j < cur.size(); ++j) cur[j] += classes[i][j];
    }
    for (std::size_t j = 0; j < cur.size(); ++j) cur[j] -= classes[i][j] * n;
  };
  if (k >= 0) rec(0, k);
  std::vector<std::pair<Int, CurveClass>> keyed;
  for (const auto& c : out) keyed.emplace_back(g.kappa_X.pair(c), c);
  std::sort(keyed.begin(), keyed.end());
  std::vector<CurveClass> res;
  for (auto& [kv, c] : keyed) res.push_back(c);
  return res;
}

std::vector<std::pair<CurveClass, Int>> classes_up_to(const GeometrySet& g, long k) {
  std::vector<std::pair<CurveClass, Int>> out;
  for (const auto& c : effective_classes(g, k - 1)) {
    long kc = g.kappa_X.pair(c).get_si();
    for (long d = 1; kc + d <= k; ++d) out.emplace_back(c, Int(d));
  }
  return out;
}

}  // namespace occ
