#include "occ/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "occ/error.hpp"

namespace occ {

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions(n, n, cur, out);
  return out;
}

std::vector<std::vector<int>> adjacency(const DecoratedGraph& g) {
  std::vector<std::vector<int>> adj(g.cone.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    adj[g.edges[e].a].push_back((int)e);
    adj[g.edges[e].b].push_back((int)e);
  }
  return adj;
}

struct Rooted {
  std::string enc;
  Int stab;
};

Rooted encode(const DecoratedGraph& g, const std::vector<std::vector<int>>& adj, int v, int parent_edge) {
  std::vector<std::string> kids;
  Int stab = 1;
  for (int e : adj[v]) {
    if (e == parent_edge) continue;
    const auto& ed = g.edges[e];
    int w = ed.a == v ? ed.b : ed.a;
    Rooted sub = encode(g, adj, w, e);
    stab *= sub.stab;
    kids.push_back("[" + std::to_string(ed.wall) + ":" + std::to_string(ed.degree) + sub.enc + "]");
  }
  std::sort(kids.begin(), kids.end());
  for (std::size_t i = 0; i < kids.size();) {
    std::size_t j = i;
    while (j < kids.size() && kids[j] == kids[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) stab *= (unsigned long)k;
    i = j;
  }
  std::string s = "(" + std::to_string(g.cone[v]) + (g.marked == v ? "*" : "");
  for (const auto& k : kids) s += k;
  return {s + ")", stab};
}

}  // namespace

std::size_t DecoratedGraph::valence(int v) const {
  std::size_t n = 0;
  for (const auto& e : edges) n += (e.a == v) + (e.b == v);
  return n;
}

std::vector<EdgeMultiset> decompose_class(const Fan& fan, const CurveClass& c, const KahlerCertificate& kappa) {
  auto compact = fan.compact_walls();
  std::vector<CurveClass> classes;
  for (int w : compact) {
    if (kappa.wall_values.at(w) <= 0) throw Error(ErrorKind::NoCertificate, "wall with non-positive kappa");
    classes.push_back(wall_relation(fan, w));
  }
  if (!in_kernel(fan, c)) return {};
  Rat kc(0);
  for (std::size_t i = 0; i < c.size(); ++i) kc += kappa.kappa[i] * c[i];
  if (kc < 0 || kc.get_den() != 1) return {};
  long budget = kc.get_num().get_si();

  std::vector<EdgeMultiset> out;
  std::vector<int> n(compact.size(), 0);
  CurveClass sum(c.size(), Int(0));
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == compact.size()) {
      if (left != 0 || sum != c) return;
      // split each wall total into edge degrees
      std::vector<EdgeMultiset> acc{{}};
      for (std::size_t k = 0; k < compact.size(); ++k) {
        if (n[k] == 0) continue;
        std::vector<EdgeMultiset> next;
        for (const auto& part : partitions(n[k]))
          for (const auto& base : acc) {
            EdgeMultiset m = base;
            for (int p : part) m.emplace_back(compact[k], p);
            next.push_back(std::move(m));
          }
        acc = std::move(next);
      }
      for (auto& m : acc) {
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
      }
      return;
    }
    long kv = kappa.wall_values[compact[i]].get_si();
    for (long k = 0; k * kv <= left; ++k) {
      n[i] = (int)k;
      rec(i + 1, left - k * kv);
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += classes[i][j];
    }
    // undo the additions made in the loop
    long used = left / kv + 1;
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] -= classes[i][j] * used;
    n[i] = 0;
  };
  rec(0, budget);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_effective(const Fan& fan, const CurveClass& c, const KahlerCertificate& kappa) {
  return !decompose_class(fan, c, kappa).empty();
}

std::string canonical_form(const DecoratedGraph& g) {
  auto adj = adjacency(g);
  std::string best;
  for (std::size_t r = 0; r < g.cone.size(); ++r) {
    std::string e = encode(g, adj, (int)r, -1).enc;
    if (r == 0 || e < best) best = e;
  }
  return best;
}

Int aut_order(const DecoratedGraph& g) {
  auto adj = adjacency(g);
  std::string best;
  Int stab = 0;
  long count = 0;
  for (std::size_t r = 0; r < g.cone.size(); ++r) {
    Rooted e = encode(g, adj, (int)r, -1);
    if (r == 0 || e.enc < best) {
      best = e.enc;
      stab = e.stab;
      count = 1;
    } else if (e.enc == best) {
      ++count;
    }
  }
  return stab * count;
}

void check_graph(const Fan& fan, const DecoratedGraph& g, const CurveClass& c) {
  std::size_t nv = g.cone.size();
  if (nv == 0) throw Error(ErrorKind::InvalidFan, "graph without vertices");
  if (g.edges.size() + 1 != nv) throw Error(ErrorKind::InvalidFan, "graph is not a tree");
  std::vector<int> parent(nv);
  for (std::size_t i = 0; i < nv; ++i) parent[i] = (int)i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  CurveClass sum(fan.num_rays(), Int(0));
  for (const auto& e : g.edges) {
    if (e.degree < 1) throw Error(ErrorKind::InvalidFan, "edge degree below 1");
    const Wall& w = fan.walls().at(e.wall);
    if (!w.compact()) throw Error(ErrorKind::InvalidFan, "edge on a non-compact wall");
    std::vector<int> ends{g.cone.at(e.a), g.cone.at(e.b)}, cs = w.cones;
    std::sort(ends.begin(), ends.end());
    std::sort(cs.begin(), cs.end());
    if (ends != cs) throw Error(ErrorKind::InvalidFan, "edge endpoints are not the cones of its wall");
    int x = find(e.a), y = find(e.b);
    if (x == y) throw Error(ErrorKind::InvalidFan, "graph has a cycle");
    parent[x] = y;
    auto wc = wall_relation(fan, e.wall);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += wc[i] * e.degree;
  }
  if (sum != c) throw Error(ErrorKind::InvalidFan, "edge degrees do not sum to the class");
  if (g.marked >= (int)nv) throw Error(ErrorKind::InvalidFan, "marked vertex out of range");
}

std::vector<GraphEntry> trees_for(const Fan& fan, const EdgeMultiset& edges, std::optional<int> mark_cone) {
  std::vector<DecoratedGraph> layer;
  if (edges.empty()) {
    if (!mark_cone) return {};
    DecoratedGraph g;
    g.cone = {*mark_cone};
    g.marked = 0;
    return {{g, Int(1)}};
  }
  // Grow trees leaf by leaf; partial trees are deduplicated per layer.
  std::map<std::pair<int, int>, int> need;
  for (const auto& e : edges) ++need[e];
  std::set<int> start;
  for (const auto& [we, k] : need)
    for (int c : fan.walls()[we.first].cones) start.insert(c);
  for (int c : start) {
    DecoratedGraph g;
    g.cone = {c};
    layer.push_back(g);
  }
  for (std::size_t step = 0; step < edges.size(); ++step) {
    std::map<std::string, DecoratedGraph> next;
    for (const auto& g : layer) {
      std::map<std::pair<int, int>, int> used;
      for (const auto& e : g.edges) ++used[{e.wall, e.degree}];
      for (const auto& [we, k] : need) {
        if (used[we] >= k) continue;
        const auto& cs = fan.walls()[we.first].cones;
        for (std::size_t v = 0; v < g.cone.size(); ++v) {
          int other;
          if (g.cone[v] == cs[0]) other = cs[1];
          else if (g.cone[v] == cs[1]) other = cs[0];
          else continue;
          DecoratedGraph h = g;
          h.cone.push_back(other);
          h.edges.push_back({(int)v, (int)g.cone.size(), we.first, we.second});
          next.emplace(canonical_form(h), std::move(h));
        }
      }
    }
    layer.clear();
    for (auto& [k, g] : next) layer.push_back(std::move(g));
  }
  std::map<std::string, DecoratedGraph> done;
  for (auto& g : layer) {
    if (!mark_cone) {
      done.emplace(canonical_form(g), g);
      continue;
    }
    for (std::size_t v = 0; v < g.cone.size(); ++v) {
      if (g.cone[v] != *mark_cone) continue;
      DecoratedGraph h = g;
      h.marked = (int)v;
      done.emplace(canonical_form(h), std::move(h));
    }
  }
  std::vector<GraphEntry> out;
  for (auto& [k, g] : done) {
    Int a = aut_order(g);
    out.push_back({std::move(g), a});
  }
  return out;
}

std::vector<GraphEntry> enumerate(const Fan& fan, const CurveClass& c, const KahlerCertificate& kappa,
                                  std::optional<int> mark_cone) {
  std::vector<GraphEntry> out;
  for (const auto& m : decompose_class(fan, c, kappa)) {
    auto part = trees_for(fan, m, mark_cone);
    for (auto& e : part) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace occ
