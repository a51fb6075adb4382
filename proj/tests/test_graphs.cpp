#include <doctest.h>

#include <random>

#include "occ/graphs.hpp"
#include "occ/gw.hpp"
#include "oracles.hpp"

using namespace occ;
using oracle::iv;

namespace {

CurveClass times(const CurveClass& c, long k) {
  CurveClass r = c;
  for (auto& x : r) x *= k;
  return r;
}

// Brute force over degree vectors bounded by the certificate.
std::set<EdgeMultiset> brute_decompose(const Fan& fan, const CurveClass& c, const KahlerCertificate& kappa) {
  auto compact = fan.compact_walls();
  Int budget = kappa.pair(c);
  std::set<EdgeMultiset> out;
  std::vector<long> totals(compact.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == compact.size()) {
      CurveClass sum(c.size(), Int(0));
      Int used = 0;
      for (std::size_t j = 0; j < compact.size(); ++j) {
        CurveClass w = wall_relation(fan, compact[j]);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += w[k] * totals[j];
        used += kappa.wall_values[compact[j]] * totals[j];
      }
      if (sum != c) return;
      // all ways to split each total into parts
      std::vector<std::vector<std::vector<int>>> parts(compact.size());
      for (std::size_t j = 0; j < compact.size(); ++j) {
        std::function<void(int, int, std::vector<int>&)> split = [&](int n, int mx, std::vector<int>& cur) {
          if (n == 0) {
            parts[j].push_back(cur);
            return;
          }
          for (int p = 1; p <= std::min(n, mx); ++p) {
            cur.push_back(p);
            split(n - p, p, cur);
            cur.pop_back();
          }
        };
        std::vector<int> cur;
        split((int)totals[j], (int)totals[j], cur);
      }
      std::function<void(std::size_t, EdgeMultiset&)> combine = [&](std::size_t j, EdgeMultiset& ms) {
        if (j == compact.size()) {
          EdgeMultiset s = ms;
          std::sort(s.begin(), s.end());
          out.insert(s);
          return;
        }
        for (const auto& p : parts[j]) {
          std::size_t before = ms.size();
          for (int x : p) ms.push_back({compact[j], x});
          combine(j + 1, ms);
          ms.resize(before);
        }
      };
      EdgeMultiset ms;
      combine(0, ms);
      return;
    }
    for (long n = 0; kappa.wall_values[compact[i]] * n <= budget; ++n) {
      totals[i] = n;
      rec(i + 1);
    }
    totals[i] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("decompose_class examples") {
  GeometrySet con = build_geometry(oracle::spec_with_framing("conifold.json", 0));
  int w = con.X.compact_walls()[0];
  CurveClass line = wall_relation(con.X, w);
  auto two = decompose_class(con.X, times(line, 2), con.kappa_X);
  std::set<EdgeMultiset> got(two.begin(), two.end());
  CHECK(got == std::set<EdgeMultiset>{{{w, 2}}, {{w, 1}, {w, 1}}});
  auto zero = decompose_class(con.X, times(line, 0), con.kappa_X);
  CHECK(zero == std::vector<EdgeMultiset>{{}});

  GeometrySet p2 = build_geometry(oracle::spec_with_framing("local_p2.json", 0));
  auto cw = p2.X.compact_walls();
  auto h = decompose_class(p2.X, wall_relation(p2.X, cw[0]), p2.kappa_X);
  std::set<EdgeMultiset> hs(h.begin(), h.end());
  std::set<EdgeMultiset> want;
  for (int x : cw) want.insert({{x, 1}});
  CHECK(hs == want);
  CHECK(!is_effective(con.X, times(line, -1), con.kappa_X));
  CHECK(is_effective(con.X, times(line, 3), con.kappa_X));
}

TEST_CASE("decompose_class matches brute force") {
  for (const char* name : {"conifold.json", "local_p2.json", "nonconvex.json"}) {
    GeometrySet g = build_geometry(oracle::spec_with_framing(name, 0));
    std::vector<CurveClass> classes;
    auto cw = g.X.compact_walls();
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) {
        CurveClass c(g.X.num_rays(), Int(0));
        CurveClass w0 = wall_relation(g.X, cw[0]);
        CurveClass w1 = wall_relation(g.X, cw.back());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = w0[i] * a + w1[i] * b;
        auto got = decompose_class(g.X, c, g.kappa_X);
        std::set<EdgeMultiset> gs(got.begin(), got.end());
        CHECK(gs.size() == got.size());
        CHECK(gs == brute_decompose(g.X, c, g.kappa_X));
      }
  }
}

TEST_CASE("enumerate examples") {
  GeometrySet c3 = build_geometry(oracle::spec_with_framing("c3.json", 0));
  auto single = enumerate(c3.X, iv({0, 0, 0}), c3.kappa_X, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].graph.cone == std::vector<int>{0});
  CHECK(single[0].graph.edges.empty());
  CHECK(single[0].graph.marked == 0);
  CHECK(single[0].aut == 1);
  CHECK(enumerate(c3.X, iv({0, 0, 0}), c3.kappa_X).empty());

  GeometrySet con = build_geometry(oracle::spec_with_framing("conifold.json", 0));
  int w = con.X.compact_walls()[0];
  auto two = enumerate(con.X, times(wall_relation(con.X, w), 2), con.kappa_X);
  REQUIRE(two.size() == 3);
  std::multiset<std::pair<std::size_t, Int>> shape;
  for (const auto& e : two) shape.insert({e.graph.edges.size(), e.aut});
  CHECK(shape == std::multiset<std::pair<std::size_t, Int>>{{1, Int(1)}, {2, Int(2)}, {2, Int(2)}});

  auto e = enumerate(c3.Y, class_X_to_Y(c3, iv({0, 0, 0}), Int(1)), c3.kappa_Y);
  REQUIRE(e.size() == 1);
  CHECK(e[0].graph.edges.size() == 1);
  CHECK(e[0].graph.edges[0].wall == c3.tau0_Y);
  CHECK(e[0].aut == 1);
  // twice the line: one double edge and two paths
  CHECK(enumerate(c3.Y, class_X_to_Y(c3, iv({0, 0, 0}), Int(2)), c3.kappa_Y).size() == 3);
}

TEST_CASE("aut_order examples") {
  GeometrySet p2 = build_geometry(oracle::spec_with_framing("local_p2.json", 0));
  int w = p2.X.compact_walls()[0];
  const auto& cs = p2.X.walls()[w].cones;
  DecoratedGraph edge;
  edge.cone = {cs[0], cs[1]};
  edge.edges = {{0, 1, w, 1}};
  CHECK(aut_order(edge) == 1);
  for (int k = 1; k <= 4; ++k) {
    DecoratedGraph star;
    star.cone = {cs[0]};
    for (int i = 0; i < k; ++i) {
      star.cone.push_back(cs[1]);
      star.edges.push_back({0, i + 1, w, 2});
    }
    Int fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    CHECK(aut_order(star) == fact);
  }
  DecoratedGraph path;
  path.cone = {cs[1], cs[0], cs[1]};
  path.edges = {{0, 1, w, 1}, {1, 2, w, 1}};
  path.marked = 1;
  CHECK(aut_order(path) == 2);
  path.marked = 0;
  CHECK(aut_order(path) == 1);
}

TEST_CASE("canonical_form is a relabeling invariant") {
  GeometrySet p2 = build_geometry(oracle::spec_with_framing("local_p2.json", 0));
  std::mt19937 rng(1);
  auto cw = p2.X.compact_walls();
  CurveClass c = times(wall_relation(p2.X, cw[0]), 3);
  for (const auto& e : enumerate(p2.X, c, p2.kappa_X, 0)) {
    std::vector<int> p(e.graph.cone.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    DecoratedGraph h;
    h.cone.assign(p.size(), -1);
    for (std::size_t v = 0; v < p.size(); ++v) h.cone[p[v]] = e.graph.cone[v];
    for (const auto& ed : e.graph.edges) h.edges.push_back({p[ed.b], p[ed.a], ed.wall, ed.degree});
    std::reverse(h.edges.begin(), h.edges.end());
    h.marked = p[e.graph.marked];
    CHECK(canonical_form(h) == canonical_form(e.graph));
    CHECK(aut_order(h) == e.aut);
  }
}

TEST_CASE("enumerate matches the brute-force oracle") {
  for (const char* name : {"conifold.json", "local_p2.json"}) {
    GeometrySet g = build_geometry(oracle::spec_with_framing(name, 0));
    for (const auto& c : effective_classes(g, 3)) {
      std::vector<std::optional<int>> marks{std::nullopt};
      for (int cone = 0; cone < (int)g.X.cones().size(); ++cone) marks.push_back(cone);
      for (auto m : marks) CHECK(oracle::compare_enumeration(g.X, c, g.kappa_X, m) == "");
      for (const auto& e : enumerate(g.X, c, g.kappa_X)) CHECK_NOTHROW(check_graph(g.X, e.graph, c));
    }
  }
}

TEST_CASE("check_graph rejects broken graphs") {
  GeometrySet con = build_geometry(oracle::spec_with_framing("conifold.json", 0));
  int w = con.X.compact_walls()[0];
  CurveClass line = wall_relation(con.X, w);
  DecoratedGraph g;
  g.cone = {0, 1};
  g.edges = {{0, 1, w, 1}};
  CHECK_NOTHROW(check_graph(con.X, g, line));
  CHECK_THROWS(check_graph(con.X, g, times(line, 2)));
  DecoratedGraph same = g;
  same.cone = {0, 0};
  CHECK_THROWS(check_graph(con.X, same, line));
  DecoratedGraph cyc;
  cyc.cone = {0, 1};
  cyc.edges = {{0, 1, w, 1}, {0, 1, w, 1}};
  CHECK_THROWS(check_graph(con.X, cyc, times(line, 2)));
}
