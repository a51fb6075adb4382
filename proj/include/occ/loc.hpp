#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "occ/build.hpp"
#include "occ/graphs.hpp"
#include "occ/symrat.hpp"

namespace occ {

enum class TheoryKind { OpenX, LogY, Closed0, Closed1 };

struct Theory {
  TheoryKind kind = TheoryKind::OpenX;
  Int winding = 1;  // OpenX only

  static Theory open(const Int& d) { return {TheoryKind::OpenX, d}; }
  static Theory log() { return {TheoryKind::LogY, 1}; }
  static Theory closed(int points) { return {points ? TheoryKind::Closed1 : TheoryKind::Closed0, 1}; }
};

// The fan a theory localizes on: X, Y or X4.
const Fan& theory_fan(const GeometrySet& g, TheoryKind kind);

struct Summand {
  LinForm u;   // weight at the first cone
  LinForm u2;  // weight at the second cone
  Int degree;
};

struct EdgeBundle {
  int cone_from = -1, cone_to = -1;
  LinForm w;                     // tangent weight at cone_from
  Summand tangent;
  std::vector<Summand> normal;   // one per wall ray, in wall ray order
  Int total_degree() const;
};

EdgeBundle edge_bundle(const GeometrySet& g, TheoryKind kind, int wall);

// Moving part of H^1 over H^0 for the degree-d cover of the wall's line.
FactoredRat edge_factor(const EdgeBundle& eb, int d);
FactoredRat edge_factor(const GeometrySet& g, TheoryKind kind, int wall, int d);

struct Slot {
  LinForm w;
  Int div = 1;
  bool weighted = true;

  static Slot of(const LinForm& w, const Int& div) { return {w, div, true}; }
  static Slot bare() { return {LinForm(), 1, false}; }
};

// Genus-zero integral of prod 1/(w_j - psi_j) with the unstable conventions.
FactoredRat vertex_integral(const std::vector<Slot>& slots);

// i^*_cone of the class of the divisor ray R in X4; zero off the cones that
// contain that ray.
LinForm divisor_restriction(const GeometrySet& g, int cone);

// Per-theory admission: OpenX marked at sigma0, LogY with a single tau0 edge,
// Closed1 marked at iota(sigma0_hat).
std::vector<GraphEntry> admitted_graphs(const GeometrySet& g, const Theory& th, const CurveClass& c);

// Caches flag weights, vertex weights and edge factors of one theory.
class Localizer {
 public:
  Localizer(const GeometrySet& g, const Theory& th);

  const Fan& fan() const { return fan_; }
  const LinForm& weight(int wall, int cone);
  const FactoredRat& vertex_weight(int cone);
  const FactoredRat& edge(int wall, int d);

  FactoredRat contribution(const DecoratedGraph& graph, const Int& aut);

 private:
  const GeometrySet& g_;
  Theory th_;
  const Fan& fan_;
  std::map<std::pair<int, int>, LinForm> weights_;
  std::map<int, FactoredRat> vertex_;
  std::map<std::pair<int, int>, FactoredRat> edge_;
};

FactoredRat contribution(const GeometrySet& g, const Theory& th, const DecoratedGraph& graph, const Int& aut);

}  // namespace occ
