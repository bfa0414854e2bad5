#pragma once

#include "conesing/cone.hpp"
#include "conesing/divisor.hpp"
#include "conesing/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace conesing {

struct CatalogEntry {
  ConeTriple triple;  ///< canonical form
  SeifertData seifert;
  Rational mld;
  Rational fano_angle;
  std::int64_t max_isotropy;
  std::int64_t canonical_index;
};

struct Catalog {
  Rational epsilon0;
  std::int64_t isotropy_bound;
  /// L = lcm(1..N); every fractional part with denominator <= N is a multiple of 1/L.
  std::int64_t denominator = 1;
  /// Candidate divisors built before filtering: (L+1)^2 * floor(2L/epsilon0).
  std::size_t candidates = 0;
  std::vector<CatalogEntry> entries;
};

struct EnumerationOptions {
  /// Added to the upper end of the a_inf range. Only for negative controls.
  std::int64_t a_infinity_shift = 0;
};

/// Boundary-free surface cone singularities with mld >= epsilon0 and isotropies <= N,
/// from D = (a0/L){0} + (a1/L){1} + (a_inf/L){inf} with L = lcm(1..N), a0, a1 in [0, L] and
/// a_inf in (-(a0 + a1), 2L/epsilon0 - (a0 + a1)]. L = N for N <= 2.
/// Sorted by (degree, mld, divisor text).
Catalog enumerate_catalog(const Rational& epsilon0, std::int64_t isotropy_bound,
                          const EnumerationOptions& options = {});

/// klt, mld >= epsilon0 and max isotropy <= N.
bool is_member(const ConeTriple& t, const Rational& epsilon0, std::int64_t isotropy_bound);

/// Largest eps such that every prime divisor over the germ (exceptional or not)
/// has log discrepancy >= eps: min(mld, 1).
Rational lc_level(const Rational& mld);

struct ConsistencyFailure {
  std::size_t entry;
  std::string check;
  std::string detail;
};

struct ConsistencyReport {
  std::size_t checks_run = 0;
  std::vector<ConsistencyFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Per entry: (i) quotient point log discrepancies 1/q >= lc_level(mld)/N;
/// (ii) central a_l = 1/fano_angle; (iii) fano_angle <= 1/mld.
ConsistencyReport catalog_consistency_check(std::span<const CatalogEntry> entries,
                                            std::int64_t isotropy_bound);

}  // namespace conesing
