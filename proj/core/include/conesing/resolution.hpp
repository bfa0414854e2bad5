#pragma once

#include "conesing/cone.hpp"
#include "conesing/divisor.hpp"
#include "conesing/matrix.hpp"
#include "conesing/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace conesing {

struct GraphNode {
  std::int64_t self_intersection;
  bool is_central;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

/// Star-shaped resolution graph. Node 0 is the central curve; every other node
/// lies on exactly one branch path out of it.
class DualGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Validates the star shape and self-intersections <= -1.
  DualGraph(std::vector<GraphNode> nodes, std::vector<Edge> edges);

  const std::vector<GraphNode>& nodes() const { return nodes_; }
  /// Normalized so that first < second, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t central() const { return central_; }

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

 private:
  std::vector<GraphNode> nodes_;
  std::vector<Edge> edges_;
  std::size_t central_ = 0;
};

struct DiscrepancyReport {
  /// a_l(E_i) in node order.
  std::vector<Rational> log_discrepancies;
  Rational mld;
  bool is_klt;
  /// lcm of the denominators of the log discrepancies.
  std::int64_t canonical_index;
};

/// Central node -b, then one Hirzebruch-Jung chain per branch, c1 end at the center.
DualGraph build_graph(const SeifertData& s);

/// Diagonal = self-intersections, 1 on edges.
RationalMatrix intersection_matrix(const DualGraph& g);

/// Solves sum_j (a_j - 1)(E_j . E_i) = -2 - E_i^2 on any negative definite
/// intersection matrix of rational curves. Throws NotContractible otherwise.
std::vector<Rational> solve_log_discrepancies(const RationalMatrix& intersections);

DiscrepancyReport discrepancies(const DualGraph& g);

/// Minimum log discrepancy over every divisor reachable by at most `rounds` blow-ups
/// of nodes and crossings, using a(edge) = a_i + a_j and a(free point) = a_i + 1.
/// Throws InvalidInput for non-klt graphs.
Rational mld_blowup_oracle(const DualGraph& g, int rounds);

/// mld of a cyclic quotient (at most two branches) from its lattice cone.
/// Throws InvalidInput for more than two branches.
Rational toric_mld_oracle(const SeifertData& s);

/// Seifert data -> graph -> discrepancies, for a boundary-free cone triple.
DiscrepancyReport resolve(const ConeTriple& t);

}  // namespace conesing
