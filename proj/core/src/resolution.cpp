#include "conesing/resolution.hpp"

#include "conesing/continued_fraction.hpp"
#include "conesing/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace conesing {

DualGraph::DualGraph(std::vector<GraphNode> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  const std::size_t n = nodes_.size();
  if (n == 0) throw InvalidInput("dual graph needs at least one node");
  std::size_t centrals = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (nodes_[i].self_intersection > -1) {
      throw InvalidInput("self-intersection " + std::to_string(nodes_[i].self_intersection) +
                         " of E_" + std::to_string(i) + " is not <= -1");
    }
    if (nodes_[i].is_central) {
      ++centrals;
      central_ = i;
    }
  }
  if (centrals != 1) throw InvalidInput("dual graph needs exactly one central node");

  for (auto& [a, b] : edges_) {
    if (a == b || a >= n || b >= n) throw InvalidInput("invalid dual graph edge");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidInput("duplicate dual graph edge");
  }
  if (edges_.size() != n - 1) throw InvalidInput("dual graph is not a tree");

  // Connectivity via union-find; with n - 1 edges this also rules out cycles.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> valence(n, 0);
  for (const auto& [a, b] : edges_) {
    parent[find(a)] = find(b);
    ++valence[a];
    ++valence[b];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (find(i) != find(0)) throw InvalidInput("dual graph is not connected");
    if (i != central_ && valence[i] > 2) {
      throw InvalidInput("dual graph is not star-shaped: E_" + std::to_string(i) +
                         " branches off the center");
    }
  }
}

DualGraph build_graph(const SeifertData& s) {
  std::vector<GraphNode> nodes{{-s.b(), true}};
  std::vector<DualGraph::Edge> edges;
  for (const auto& br : s.branches()) {
    std::size_t previous = 0;
    for (std::int64_t c : hj_expand(br.alpha, br.beta)) {
      nodes.push_back({-c, false});
      edges.emplace_back(previous, nodes.size() - 1);
      previous = nodes.size() - 1;
    }
  }
  return DualGraph(std::move(nodes), std::move(edges));
}

RationalMatrix intersection_matrix(const DualGraph& g) {
  RationalMatrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = Rational(g.nodes()[i].self_intersection);
  for (const auto& [a, b] : g.edges()) {
    m(a, b) = Rational(1);
    m(b, a) = Rational(1);
  }
  return m;
}

std::vector<Rational> solve_log_discrepancies(const RationalMatrix& intersections) {
  if (!is_negative_definite(intersections)) {
    throw NotContractible("intersection matrix is not negative definite");
  }
  const std::size_t n = intersections.rows();
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = Rational(-2) - intersections(i, i);
  std::vector<Rational> a = solve_linear(intersections, rhs);
  for (auto& v : a) v += Rational(1);
  return a;
}

DiscrepancyReport discrepancies(const DualGraph& g) {
  DiscrepancyReport report;
  report.log_discrepancies = solve_log_discrepancies(intersection_matrix(g));
  report.mld = *std::min_element(report.log_discrepancies.begin(),
                                 report.log_discrepancies.end());
  report.is_klt = report.mld.sign() > 0;
  report.canonical_index = 1;
  for (const auto& a : report.log_discrepancies) {
    report.canonical_index = lcm64(report.canonical_index, to_int64(a.denominator()));
  }
  return report;
}

Rational mld_blowup_oracle(const DualGraph& g, int rounds) {
  if (rounds < 1) throw InvalidInput("blow-up oracle needs at least one round");
  const DiscrepancyReport report = discrepancies(g);
  if (!report.is_klt) {
    throw InvalidInput("blow-up oracle needs a klt graph; the infimum need not be attained");
  }
  constexpr std::size_t kMaxDivisors = 2'000'000;

  std::vector<Rational> a = report.log_discrepancies;
  std::vector<DualGraph::Edge> crossings = g.edges();
  Rational best = *std::min_element(a.begin(), a.end());
  for (int round = 0; round < rounds; ++round) {
    const std::size_t curves = a.size();
    std::vector<DualGraph::Edge> next;
    next.reserve(2 * crossings.size() + curves);
    for (const auto& [i, j] : crossings) {
      a.push_back(a[i] + a[j]);
      const std::size_t k = a.size() - 1;
      next.emplace_back(i, k);
      next.emplace_back(k, j);
      best = min(best, a[k]);
    }
    for (std::size_t i = 0; i < curves; ++i) {
      a.push_back(a[i] + Rational(1));
      next.emplace_back(i, a.size() - 1);
      best = min(best, a.back());
    }
    crossings = std::move(next);
    if (a.size() > kMaxDivisors) throw InvalidInput("blow-up oracle: too many rounds");
  }
  return best;
}

Rational toric_mld_oracle(const SeifertData& s) {
  if (s.branches().size() > 2) {
    throw InvalidInput("toric oracle needs at most two branches, got " +
                       std::to_string(s.branches().size()));
  }
  // Full chain: first branch reversed, center, second branch.
  std::vector<std::int64_t> chain;
  if (!s.branches().empty()) {
    const auto first = hj_expand(s.branches()[0].alpha, s.branches()[0].beta);
    chain.assign(first.rbegin(), first.rend());
  }
  chain.push_back(s.b());
  if (s.branches().size() == 2) {
    const auto second = hj_expand(s.branches()[1].alpha, s.branches()[1].beta);
    chain.insert(chain.end(), second.begin(), second.end());
  }

  // Fan rays: u0 = (0,1), u1 = (1,0), u_{i+1} = c_i u_i - u_{i-1}.
  struct Ray {
    BigInt x, y;
  };
  std::vector<Ray> rays{{0, 1}, {1, 0}};
  for (std::int64_t c : chain) {
    const Ray& cur = rays[rays.size() - 1];
    const Ray& prev = rays[rays.size() - 2];
    rays.push_back({c * cur.x - prev.x, c * cur.y - prev.y});
  }
  // Every ray must turn clockwise from u0 without wrapping past the opposite side.
  for (std::size_t i = 1; i < rays.size(); ++i) {
    if (rays[i].x <= 0) throw NotContractible("chain does not form a strictly convex cone");
  }
  const Ray& last = rays.back();
  const BigInt& p = last.x;
  const BigInt& q = last.y;

  // Functional m = (m1, 1) with <m, u0> = <m, u_last> = 1.
  const Rational m1(BigInt(1 - q), p);
  const Rational upper = m1;  // value at (1, 0), an interior point
  Rational best = upper;
  // Interior: x > 0 and y > x q / p; the value m1 x + y exceeds x / p there.
  for (BigInt x = 1; Rational(x, p) < upper; ++x) {
    BigInt y;
    mpz_fdiv_q(y.get_mpz_t(), BigInt(x * q).get_mpz_t(), p.get_mpz_t());
    ++y;
    for (;; ++y) {
      const Rational value = m1 * Rational(x, 1) + Rational(y, 1);
      if (value >= best) break;
      if (gcd(x, y) == 1) best = value;
    }
  }
  return best;
}

DiscrepancyReport resolve(const ConeTriple& t) {
  if (!t.boundary().empty()) {
    throw InvalidInput("resolution of pairs with a boundary is not supported");
  }
  return discrepancies(build_graph(normalize_seifert(t.polarization())));
}

}  // namespace conesing
