#include "conesing/cone.hpp"

#include "conesing/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace conesing {

ConeTriple::ConeTriple(QDivisorP1 polarization, QDivisorP1 boundary)
    : polarization_(std::move(polarization)), boundary_(std::move(boundary)) {
  if (degree(polarization_).sign() <= 0) {
    throw InvalidInput("polarization " + polarization_.str() + " is not ample (degree " +
                       degree(polarization_).str() + ")");
  }
  for (const auto& [p, c] : boundary_.terms()) {
    if (c.sign() < 0 || c >= Rational(1)) {
      throw InvalidInput("boundary coefficient " + c.str() + " at " + p.str() +
                         " is outside [0, 1)");
    }
  }
}

LogFanoQuotient log_fano_quotient(const ConeTriple& t) {
  LogFanoQuotient q{boundary_delta(t.polarization()), t.boundary()};
  const QDivisorP1 total = q.delta + q.boundary;
  for (const auto& [p, c] : total.terms()) {
    if (c >= Rational(1)) {
      throw NotLogFano("coefficient " + c.str() + " of delta + B at " + p.str() +
                       " is >= 1, so the quotient is not klt");
    }
  }
  const Rational deg = degree(total);
  if (deg >= Rational(2)) {
    throw NotLogFano("deg(delta + B) = " + deg.str() +
                     " >= 2, so -(K + delta + B) is not ample on the line");
  }
  return q;
}

bool is_klt_cone(const ConeTriple& t) {
  try {
    log_fano_quotient(t);
    return true;
  } catch (const NotLogFano&) {
    return false;
  }
}

Rational fano_angle(const ConeTriple& t) {
  const LogFanoQuotient q = log_fano_quotient(t);
  return degree(t.polarization()) / (Rational(2) - degree(q.delta) - degree(q.boundary));
}

Rational vertex_log_discrepancy(const ConeTriple& t) { return fano_angle(t).reciprocal(); }

std::int64_t isotropy_at(const ConeTriple& t, const PointP1& p) {
  return weil_index(t.polarization(), p);
}

std::int64_t max_isotropy(const ConeTriple& t) { return cartier_index(t.polarization()); }

ConeTriple veronese(const ConeTriple& t, std::int64_t m) {
  if (m < 1) throw InvalidInput("Veronese degree must be >= 1");
  return ConeTriple(Rational(m) * t.polarization(), t.boundary());
}

Rational epsilon0_bound(const Rational& epsilon, const Rational& r) {
  if (epsilon.sign() <= 0 || r.sign() <= 0) {
    throw InvalidInput("epsilon0_bound needs epsilon > 0 and r > 0");
  }
  return min(epsilon, r.reciprocal());
}

ConeSummary summarize(const ConeTriple& t) {
  const Rational r = fano_angle(t);
  return {degree(t.polarization()), r, r.reciprocal(), cartier_index(t.polarization()),
          max_isotropy(t)};
}

CentralFiber central_fiber_of_plt_blowup(const PltBlowupData& data) {
  if (data.m < 1) throw InvalidInput("blow-up index m must be >= 1");
  if (data.diff_qs.size() > 3) {
    throw InvalidInput("Diff has " + std::to_string(data.diff_qs.size()) +
                       " points; a klt surface blow-up has at most three");
  }
  std::vector<std::int64_t> qs;
  for (std::int64_t q : data.diff_qs) {
    if (q < 1) throw InvalidInput("Diff denominators must be positive");
    if (q > 1) qs.push_back(q);
  }
  const Rational deg = data.minus_e_degree();
  if (deg.sign() <= 0) throw InvalidInput("-E|_E must have positive degree");

  std::vector<std::int64_t> profile_qs;
  for (const auto& fp : fractional_profile(data.minus_e_restriction)) profile_qs.push_back(fp.q);
  std::sort(qs.begin(), qs.end());
  std::sort(profile_qs.begin(), profile_qs.end());
  if (qs != profile_qs) {
    throw InvalidInput("Diff denominators do not match the fractional part of -E|_E = " +
                       data.minus_e_restriction.str());
  }

  const QDivisorP1 scaled = Rational(data.m) * data.minus_e_restriction;
  if (!is_integral(scaled)) {
    throw InvalidInput("m(-E|_E) = " + scaled.str() + " is not integral; mE is not Cartier");
  }

  CentralFiber out{ConeTriple(canonical_form(data.minus_e_restriction)),
                   ConeTriple(QDivisorP1::point(PointP1::infinity(), Rational(data.m) * deg)),
                   data.m};
  if (max_isotropy(out.cover) != 1 || max_isotropy(out.cone) > data.m) {
    throw std::logic_error("central fiber isotropy bounds violated");
  }
  return out;
}

PltBlowupData vertex_blowup_data(const ConeTriple& t) {
  PltBlowupData data{{}, t.polarization(), cartier_index(t.polarization())};
  for (const auto& fp : fractional_profile(t.polarization())) data.diff_qs.push_back(fp.q);
  return data;
}

}  // namespace conesing
