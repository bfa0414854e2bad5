#include "conesing/enumeration.hpp"

#include "conesing/error.hpp"
#include "conesing/resolution.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace conesing {

namespace {

void check_run_parameters(const Rational& epsilon0, std::int64_t isotropy_bound) {
  if (epsilon0.sign() <= 0) {
    throw InvalidInput("epsilon0 must be positive; the a_inf range is unbounded otherwise");
  }
  if (epsilon0 > Rational(2)) throw InvalidInput("epsilon0 must be <= 2 for surfaces");
  if (isotropy_bound < 1) throw InvalidInput("isotropy bound N must be >= 1");
}

}  // namespace

Rational lc_level(const Rational& mld) { return min(mld, Rational(1)); }

bool is_member(const ConeTriple& t, const Rational& epsilon0, std::int64_t isotropy_bound) {
  if (!is_klt_cone(t)) return false;
  if (max_isotropy(t) > isotropy_bound) return false;
  const DiscrepancyReport report = resolve(t);
  return report.is_klt && report.mld >= epsilon0;
}

Catalog enumerate_catalog(const Rational& epsilon0, std::int64_t isotropy_bound,
                          const EnumerationOptions& options) {
  check_run_parameters(epsilon0, isotropy_bound);
  const std::int64_t n = isotropy_bound;
  std::int64_t l = 1;
  for (std::int64_t q = 2; q <= n; ++q) l = lcm64(l, q);
  // a_inf + a0 + a1 ranges over (0, 2L/epsilon0].
  const std::int64_t top = to_int64((Rational(2 * l) / epsilon0).floor()) + options.a_infinity_shift;

  Catalog catalog{epsilon0, isotropy_bound, l, 0, {}};
  std::map<std::string, CatalogEntry> kept;
  for (std::int64_t a0 = 0; a0 <= l; ++a0) {
    for (std::int64_t a1 = 0; a1 <= l; ++a1) {
      const std::int64_t s = a0 + a1;
      for (std::int64_t ainf = -s + 1; ainf <= top - s; ++ainf) {
        ++catalog.candidates;
        QDivisorP1 d;
        d.add(PointP1::at(0), Rational(a0, l));
        d.add(PointP1::at(1), Rational(a1, l));
        d.add(PointP1::infinity(), Rational(ainf, l));
        const ConeTriple t(d);
        const std::int64_t isotropy = max_isotropy(t);
        if (isotropy > n) continue;
        if (!is_klt_cone(t)) continue;
        const DiscrepancyReport report = resolve(t);
        if (!report.is_klt || report.mld < epsilon0) continue;

        QDivisorP1 form = canonical_form(d);
        std::string key = form.str();
        if (kept.contains(key)) continue;
        ConeTriple canonical(form);
        CatalogEntry entry{canonical,
                           normalize_seifert(form),
                           report.mld,
                           fano_angle(canonical),
                           isotropy,
                           report.canonical_index};
        kept.emplace(std::move(key), std::move(entry));
      }
    }
  }

  for (auto& [key, entry] : kept) catalog.entries.push_back(std::move(entry));
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              const Rational da = degree(a.triple.polarization());
              const Rational db = degree(b.triple.polarization());
              if (da != db) return da < db;
              if (a.mld != b.mld) return a.mld < b.mld;
              return a.triple.polarization().str() < b.triple.polarization().str();
            });
  return catalog;
}

ConsistencyReport catalog_consistency_check(std::span<const CatalogEntry> entries,
                                            std::int64_t isotropy_bound) {
  ConsistencyReport report;
  auto record = [&](std::size_t index, bool ok, const char* check, const std::string& detail) {
    ++report.checks_run;
    if (!ok) report.failures.push_back({index, check, detail});
  };

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    const std::string who = e.triple.polarization().str();

    const Rational needed = lc_level(e.mld) / Rational(isotropy_bound);
    for (const auto& fp : fractional_profile(e.triple.polarization())) {
      const Rational ld(1, fp.q);
      record(i, ld >= needed, "quotient_log_discrepancy",
             who + ": 1/" + std::to_string(fp.q) + " < " + needed.str());
    }

    const DiscrepancyReport solved = discrepancies(build_graph(e.seifert));
    const Rational central = solved.log_discrepancies[0];
    const bool angle_known = e.fano_angle.sign() > 0;
    record(i, angle_known && central == e.fano_angle.reciprocal(), "central_node_vs_angle",
           who + ": central a_l " + central.str() + " vs fano angle " + e.fano_angle.str());

    record(i, e.mld.sign() > 0 && e.fano_angle <= e.mld.reciprocal(), "angle_bound",
           who + ": fano angle " + e.fano_angle.str() + " > 1/mld with mld " + e.mld.str());

    record(i, solved.mld == e.mld && solved.canonical_index == e.canonical_index, "graph_resolve",
           who + ": stored mld " + e.mld.str() + " vs solved " + solved.mld.str());
  }
  return report;
}

}  // namespace conesing
