#include "occ/loc.hpp"

#include <algorithm>

#include "occ/error.hpp"

namespace occ {

namespace {

// a with x = a*w; NonIntegerDegree if there is none.
Int lin_ratio(const LinForm& x, const LinForm& w) {
  const Int* num = nullptr;
  const Int* den = nullptr;
  if (w.a != 0) num = &x.a, den = &w.a;
  else if (w.b != 0) num = &x.b, den = &w.b;
  else if (w.c != 0) num = &x.c, den = &w.c;
  else throw Error(ErrorKind::NonIntegerDegree, "zero tangent weight");
  if (!mpz_divisible_p(num->get_mpz_t(), den->get_mpz_t()))
    throw Error(ErrorKind::NonIntegerDegree, x.str() + " over " + w.str());
  Int a = *num / *den;
  if (w * a != x) throw Error(ErrorKind::NonIntegerDegree, x.str() + " is not a multiple of " + w.str());
  return a;
}

Poly shifted(const LinForm& u, const LinForm& w, long j, long d) {
  return Poly::from(u) - Poly::from(w) * make_rat(j, d);
}

}  // namespace

const Fan& theory_fan(const GeometrySet& g, TheoryKind kind) {
  switch (kind) {
    case TheoryKind::OpenX: return g.X;
    case TheoryKind::LogY: return g.Y;
    default: return g.X4;
  }
}

Int EdgeBundle::total_degree() const {
  Int s = tangent.degree;
  for (const auto& n : normal) s += n.degree;
  return s;
}

EdgeBundle edge_bundle(const GeometrySet& g, TheoryKind kind, int wall) {
  const Fan& fan = theory_fan(g, kind);
  const Wall& w = fan.walls().at(wall);
  if (!w.compact()) throw Error(ErrorKind::NotAFlag, "edge bundle of a non-compact wall");
  bool log_edge = kind == TheoryKind::LogY && wall == g.tau0_Y;
  EdgeBundle eb;
  eb.cone_from = w.cones[0];
  eb.cone_to = w.cones[1];
  if (log_edge && eb.cone_from != g.sigma0) std::swap(eb.cone_from, eb.cone_to);
  eb.w = flag_weight(fan, wall, eb.cone_from, g.f);
  LinForm w2 = flag_weight(fan, wall, eb.cone_to, g.f);
  if (w2 != -eb.w) throw Error(ErrorKind::NonIntegerDegree, "tangent weights are not opposite");
  eb.tangent = log_edge ? Summand{eb.w, LinForm(), Int(1)} : Summand{eb.w, w2, Int(2)};
  int j1 = fan.opposite_ray(wall, eb.cone_from), j2 = fan.opposite_ray(wall, eb.cone_to);
  for (int k : w.rays) {
    std::vector<int> f1, f2;
    for (int r : w.rays)
      if (r != k) f1.push_back(r), f2.push_back(r);
    f1.push_back(j1);
    f2.push_back(j2);
    Summand s;
    s.u = flag_weight(fan, fan.find_wall(f1), eb.cone_from, g.f);
    s.u2 = flag_weight(fan, fan.find_wall(f2), eb.cone_to, g.f);
    s.degree = lin_ratio(s.u - s.u2, eb.w);
    eb.normal.push_back(s);
  }
  return eb;
}

FactoredRat edge_factor(const EdgeBundle& eb, int d) {
  FactoredRat h;
  auto add = [&](const Summand& s) {
    long m = d * s.degree.get_si();
    if (m >= 0) {
      for (long j = 0; j <= m; ++j) {
        Poly p = shifted(s.u, eb.w, j, d);
        if (!p.is_zero()) h.mul(p, -1);
      }
    } else {
      for (long j = 1; j <= -m - 1; ++j) {
        Poly p = shifted(s.u, -eb.w, j, d);
        if (!p.is_zero()) h.mul(p, 1);
      }
    }
  };
  add(eb.tangent);
  for (const auto& s : eb.normal) add(s);
  return h;
}

FactoredRat edge_factor(const GeometrySet& g, TheoryKind kind, int wall, int d) {
  return edge_factor(edge_bundle(g, kind, wall), d);
}

FactoredRat vertex_integral(const std::vector<Slot>& slots) {
  long n = (long)slots.size();
  if (n == 0) throw Error(ErrorKind::ZeroWeightSlot, "vertex without slots");
  std::vector<Poly> ws;
  for (const auto& s : slots) {
    if (!s.weighted) continue;
    if (s.w.is_zero()) throw Error(ErrorKind::ZeroWeightSlot, "slot weight is the zero form");
    ws.push_back(Poly::from(s.w) * (Rat(1) / Rat(s.div)));
  }
  if (ws.empty()) return FactoredRat(Rat(n == 3 ? 1 : 0));
  // (sum 1/w_j)^{n-3} / prod w_j = P^{n-3} W^{-(n-2)}, P = sum_j prod_{i != j} w_i
  FactoredRat r;
  for (const auto& w : ws) r.mul(w, -(int)(n - 2));
  if (n != 3) {
    Poly p;
    for (std::size_t j = 0; j < ws.size(); ++j) {
      Poly term = Poly::constant(Rat(1));
      for (std::size_t i = 0; i < ws.size(); ++i)
        if (i != j) term = term * ws[i];
      p = p + term;
    }
    r.mul(p, (int)(n - 3));
  }
  return r;
}

LinForm divisor_restriction(const GeometrySet& g, int cone) {
  if (!g.X4.cone_contains(cone, g.R)) return LinForm();
  auto facet = g.X4.cones()[cone];
  facet.erase(std::find(facet.begin(), facet.end(), g.R));
  return flag_weight(g.X4, g.X4.find_wall(facet), cone, g.f);
}

std::vector<GraphEntry> admitted_graphs(const GeometrySet& g, const Theory& th, const CurveClass& c) {
  switch (th.kind) {
    case TheoryKind::OpenX:
      return enumerate(g.X, c, g.kappa_X, g.sigma0);
    case TheoryKind::LogY: {
      std::vector<GraphEntry> out;
      for (auto& e : enumerate(g.Y, c, g.kappa_Y)) {
        auto n = std::count_if(e.graph.edges.begin(), e.graph.edges.end(),
                               [&](const GraphEdge& ed) { return ed.wall == g.tau0_Y; });
        if (n == 1) out.push_back(std::move(e));
      }
      return out;
    }
    case TheoryKind::Closed0:
      return enumerate(g.X4, c, g.kappa_X4);
    case TheoryKind::Closed1:
      return enumerate(g.X4, c, g.kappa_X4, g.sigma0_hat);
  }
  return {};
}

Localizer::Localizer(const GeometrySet& g, const Theory& th) : g_(g), th_(th), fan_(theory_fan(g, th.kind)) {}

const LinForm& Localizer::weight(int wall, int cone) {
  auto key = std::make_pair(wall, cone);
  auto it = weights_.find(key);
  if (it == weights_.end()) it = weights_.emplace(key, flag_weight(fan_, wall, cone, g_.f)).first;
  return it->second;
}

const FactoredRat& Localizer::vertex_weight(int cone) {
  auto it = vertex_.find(cone);
  if (it == vertex_.end()) it = vertex_.emplace(cone, occ::vertex_weight(fan_, cone, g_.f)).first;
  return it->second;
}

const FactoredRat& Localizer::edge(int wall, int d) {
  auto key = std::make_pair(wall, d);
  auto it = edge_.find(key);
  if (it == edge_.end()) it = edge_.emplace(key, edge_factor(g_, th_.kind, wall, d)).first;
  return it->second;
}

static FactoredRat power(const FactoredRat& x, long e) {
  FactoredRat r;
  if (e == 0) return r;
  FactoredRat b = e > 0 ? x : x.inverse();
  for (long i = 0; i < (e > 0 ? e : -e); ++i) r.mul(b);
  return r;
}

FactoredRat Localizer::contribution(const DecoratedGraph& graph, const Int& aut) {
  FactoredRat r(Rat(1) / Rat(aut));
  const TheoryKind kind = th_.kind;
  if (kind == TheoryKind::OpenX) {
    const Int& d = th_.winding;
    const Int fd = g_.f * d;
    Rat pre(fd % 2 == 0 ? 1 : -1);
    for (Int k = 1; k < d; ++k) pre *= Rat(fd + k);
    for (Int k = 2; k <= d; ++k) pre /= Rat(k);
    r.mul(pre);
    r.mul(Poly::var(U1), -1);
  } else {
    r.mul(Poly::var(S), 1);
  }
  for (const auto& e : graph.edges) {
    r.mul(edge(e.wall, e.degree));
    r.mul(make_rat(1, e.degree));
  }
  auto adj_slots = [&](int v) {
    std::vector<Slot> slots;
    for (const auto& e : graph.edges) {
      if (e.a != v && e.b != v) continue;
      slots.push_back(Slot::of(weight(e.wall, graph.cone[v]), e.degree));
    }
    return slots;
  };
  for (int v = 0; v < (int)graph.cone.size(); ++v) {
    long val = (long)graph.valence(v);
    bool marked = graph.marked == v;
    auto slots = adj_slots(v);
    switch (kind) {
      case TheoryKind::OpenX:
        if (marked) slots.push_back(Slot::of(LinForm(1, 0, 0), th_.winding));
        r.mul(power(vertex_weight(graph.cone[v]), val - 1 + (marked ? 1 : 0)));
        break;
      case TheoryKind::LogY:
        if (graph.cone[v] == g_.sigma0_hat) {
          if (val != 1) throw Error(ErrorKind::InvalidFan, "divisor vertex of valence other than one");
          continue;
        }
        r.mul(power(vertex_weight(graph.cone[v]), val - 1));
        break;
      case TheoryKind::Closed0:
        r.mul(power(vertex_weight(graph.cone[v]), val - 1));
        break;
      case TheoryKind::Closed1:
        if (marked) {
          slots.push_back(Slot::bare());
          r.mul(divisor_restriction(g_, graph.cone[v]), 1);
        }
        r.mul(power(vertex_weight(graph.cone[v]), val - 1));
        break;
    }
    if (r.is_zero()) return r;
    r.mul(vertex_integral(slots));
  }
  return r;
}

FactoredRat contribution(const GeometrySet& g, const Theory& th, const DecoratedGraph& graph, const Int& aut) {
  Localizer loc(g, th);
  return loc.contribution(graph, aut);
}

}  // namespace occ
