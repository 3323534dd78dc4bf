#pragma once

#include "tsurf/diagram.hpp"
#include "tsurf/homology.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/series.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tsurf {

// Endpoint of a node: q_e^+ lies on graph.edges[e].a, q_e^- on graph.edges[e].b.
struct Endpoint {
  int edge = 0;
  bool plus = true;
  auto operator<=>(const Endpoint &) const = default;
};

struct WeightedDualGraph {
  DualGraph graph;
  std::vector<long> n;     // s_e = s^{n_e} a_e (1 + O(s))
  std::vector<Rational> a;
  // Coordinate of each endpoint on a genus-0 component; nullopt is the point at infinity.
  std::map<Endpoint, std::optional<Rational>> node_points;
  // Caller-supplied bidifferential values on positive-genus components.
  std::map<std::pair<Endpoint, Endpoint>, Rational> bidifferential;

  int vertex_of(Endpoint p) const;
  void validate() const;
};

struct DifferentialSymbol {
  int index = 0;
  std::set<int> support;
  std::vector<int> pole_edges;
  std::map<Endpoint, Rational> node_values; // missing entries are opaque
};

struct OrientedEdge {
  int edge = 0;
  bool forward = true; // forward runs from q^+ to q^-
  Endpoint start() const { return {edge, forward}; }
  Endpoint end() const { return {edge, !forward}; }
  OrientedEdge reversed() const { return {edge, !forward}; }
  bool operator==(const OrientedEdge &) const = default;
};

struct OrientedPath {
  std::vector<OrientedEdge> edges;
  long weight(const WeightedDualGraph &g) const;
};

double s_coordinate(double t, const Rational &modulus, long r);

long jump_distance(const WeightedDualGraph &g, const DifferentialSymbol &ti, const DifferentialSymbol &tj);
std::vector<long> log_coefficient(const AdaptedBasis &basis, int i, int j);
std::vector<long> log_coefficient(const std::vector<IntVec> &crossing, int i, int j);

// nullopt when an opaque value enters the product.
std::optional<Rational> path_coefficient(const WeightedDualGraph &g, const OrientedPath &path,
                                         const DifferentialSymbol &ti, const DifferentialSymbol &tj);
// Nonempty paths from the support of ti to the support of tj of minimal weighted length.
std::vector<OrientedPath> minimal_paths(const WeightedDualGraph &g, const DifferentialSymbol &ti,
                                        const DifferentialSymbol &tj);
LeadingSeries period_leading(const WeightedDualGraph &g, const std::vector<IntVec> &crossing,
                             const DifferentialSymbol &ti, const DifferentialSymbol &tj);

struct Case3Input {
  long n1 = 1, n2 = 1;
  Rational a1 = 1, a2 = 1;
  Rational omega_p = 1, omega_q = 1;     // elliptic differential at the nodes p, q
  Rational theta3_0 = 1, theta3_1 = 1;   // holomorphic part of the third differential at 0 and 1
};

struct Case3Verdict {
  char branch = 'a';
  long order = 0;
  Rational coefficient;         // from the path expansion
  Rational printed_coefficient; // closed form with the opposite sign convention
  std::string verdict;
};

// Genus-0 vertex 0 carrying the self-node (points lambda and infinity) and the nodes at 0 and 1;
// elliptic vertex 1 with q glued to 0 along edge 0 and p glued to 1 along edge 1.
WeightedDualGraph case3_graph(const Case3Input &in);
// `shape` must be the Case-3 dual graph.
Case3Verdict case3_verdict(const DualGraph &shape, const Case3Input &in);
Case3Verdict case3_verdict(const Case3Input &in);

struct Case6Input {
  long r1 = 1, r2 = 1;
  Rational theta1_p1 = 1, theta1_q1 = 1; // first elliptic differential at its nodes
  Rational theta2_p2 = 1, theta2_q2 = 1;
};

struct Case6Verdict {
  bool forced = false;
  long order = 0;
  Rational coefficient;         // leading coefficient of det(dPi/ds) from the series calculus
  Rational printed_coefficient; // closed form (r1 + r2) (pi'_12)^2, opposite sign convention
  Rational pi12_coefficient;
  LeadingSeries determinant;
  std::string verdict;
};

// Two elliptic vertices joined by edge 0 (p1 to p2) and edge 1 (q1 to q2), with a_e = 1.
WeightedDualGraph case6_graph(const Case6Input &in);
Case6Verdict case6_moduli_forcing(const DualGraph &shape, const Case6Input &in);
Case6Verdict case6_moduli_forcing(const Case6Input &in);

} // namespace tsurf
