#pragma once

#include "conesing/divisor.hpp"
#include "conesing/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace conesing {

/// Associated triple (P^1, D; B) of a surface cone singularity.
class ConeTriple {
 public:
  /// Requires degree(polarization) > 0 and boundary coefficients in [0, 1).
  explicit ConeTriple(QDivisorP1 polarization, QDivisorP1 boundary = {});

  const QDivisorP1& polarization() const { return polarization_; }
  const QDivisorP1& boundary() const { return boundary_; }

  friend bool operator==(const ConeTriple&, const ConeTriple&) = default;

 private:
  QDivisorP1 polarization_;
  QDivisorP1 boundary_;
};

/// The pair (P^1, delta + boundary); klt with positive anti-log-canonical degree.
struct LogFanoQuotient {
  QDivisorP1 delta;
  QDivisorP1 boundary;
};

/// Throws NotLogFano naming the violated inequality.
LogFanoQuotient log_fano_quotient(const ConeTriple& t);

/// Whether log_fano_quotient succeeds.
bool is_klt_cone(const ConeTriple& t);

/// r with D ~ -r (K + delta + B): deg D / (2 - deg(delta + B)).
Rational fano_angle(const ConeTriple& t);

/// Log discrepancy of the vertex blow-up divisor, 1 / fano_angle.
Rational vertex_log_discrepancy(const ConeTriple& t);

std::int64_t isotropy_at(const ConeTriple& t, const PointP1& p);
std::int64_t max_isotropy(const ConeTriple& t);

/// Veronese subring of degree m: polarization m D, boundary unchanged.
ConeTriple veronese(const ConeTriple& t, std::int64_t m);

/// min(epsilon, 1/r).
Rational epsilon0_bound(const Rational& epsilon, const Rational& r);

struct ConeSummary {
  Rational degree;
  Rational fano_angle;
  Rational vertex_log_discrepancy;
  std::int64_t cartier_index;
  std::int64_t max_isotropy;
};

ConeSummary summarize(const ConeTriple& t);

/// Numerical data of a plt blow-up extracting E = P^1 over the point.
struct PltBlowupData {
  /// Denominators of Diff_E(0) = sum (1 - 1/q_i) P_i, at most three.
  std::vector<std::int64_t> diff_qs;
  /// The Q-divisor -E|_E on E; its denominators must be exactly diff_qs.
  QDivisorP1 minus_e_restriction;
  /// Index with m E Cartier near E.
  std::int64_t m;

  Rational minus_e_degree() const { return degree(minus_e_restriction); }
};

struct CentralFiber {
  /// Triple of the special fiber X0, in canonical form.
  ConeTriple cone;
  /// Triple (P^1, -m E|_E; 0) of the index-one cover X0', placed at infinity.
  ConeTriple cover;
  /// Degree of the cyclic quotient X0' -> X0.
  std::int64_t degree;
};

/// Combinatorial central fiber of the degeneration to the normal cone of E.
/// Throws InvalidInput for non-integral m(-E|_E), more than three Diff points,
/// non-positive degree, or Diff data inconsistent with -E|_E.
CentralFiber central_fiber_of_plt_blowup(const PltBlowupData& data);

/// Blow-up data of the vertex blow-up of a boundary-free cone.
PltBlowupData vertex_blowup_data(const ConeTriple& t);

}  // namespace conesing
