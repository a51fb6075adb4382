#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "occ/fan.hpp"

namespace occ {

// Sorted multiset of (wall, degree) pairs.
using EdgeMultiset = std::vector<std::pair<int, int>>;

// All multisets of positive-degree compact walls summing to the class.
// NoCertificate if some compact wall has non-positive kappa value.
std::vector<EdgeMultiset> decompose_class(const Fan& fan, const CurveClass& c, const KahlerCertificate& kappa);

bool is_effective(const Fan& fan, const CurveClass& c, const KahlerCertificate& kappa);

struct GraphEdge {
  int a = 0, b = 0;  // vertex indices
  int wall = 0;
  int degree = 1;
};

struct DecoratedGraph {
  std::vector<int> cone;  // label of each vertex
  std::vector<GraphEdge> edges;
  int marked = -1;        // vertex carrying the marked point, or -1

  std::size_t valence(int v) const;
};

struct GraphEntry {
  DecoratedGraph graph;
  Int aut;
};

// Isomorphism-invariant string.
std::string canonical_form(const DecoratedGraph& g);
Int aut_order(const DecoratedGraph& g);

// Throws InvalidFan with a reason if g is not a tree of flags summing to c.
void check_graph(const Fan& fan, const DecoratedGraph& g, const CurveClass& c);

// Isomorphism classes of decorated trees for the class; with mark_cone set,
// one-pointed trees whose marked vertex carries that cone. The zero class
// yields a single marked vertex, or nothing when unmarked.
std::vector<GraphEntry> enumerate(const Fan& fan, const CurveClass& c, const KahlerCertificate& kappa,
                                  std::optional<int> mark_cone = std::nullopt);

// Trees whose edges are exactly the given multiset.
std::vector<GraphEntry> trees_for(const Fan& fan, const EdgeMultiset& edges, std::optional<int> mark_cone);

}  // namespace occ
