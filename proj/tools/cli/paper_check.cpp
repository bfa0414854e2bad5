#include "paper_check.hpp"

#include "conesing/cone.hpp"
#include "conesing/error.hpp"
#include "conesing/groebner.hpp"
#include "conesing/toric_an.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace conesing::cli {

bool PaperCheckReport::passed() const { return failures() == 0; }

std::size_t PaperCheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
}

std::vector<std::string> missing_from_catalog(const Catalog& catalog) {
  std::set<std::string> known;
  for (const auto& e : catalog.entries) known.insert(canonical_form(e.triple.polarization()).str());

  const std::int64_t n = catalog.isotropy_bound;
  // Every fractional part with denominator <= N.
  std::vector<Rational> fractions{Rational(0)};
  for (std::int64_t q = 2; q <= n; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) fractions.emplace_back(p, q);
    }
  }
  const Rational top = Rational(2) / catalog.epsilon0 + Rational(3);
  const PointP1 points[] = {PointP1::at(0), PointP1::at(1), PointP1::infinity()};
  std::set<std::string> missing;
  for (const auto& f0 : fractions) {
    for (const auto& f1 : fractions) {
      for (const auto& finf : fractions) {
        const Rational fractional = f0 + f1 + finf;
        // Integer part k with 0 < fractional + k <= top.
        for (BigInt k = (-fractional).floor() + 1; Rational(k, 1) + fractional <= top; ++k) {
          QDivisorP1 d;
          d.add(points[0], f0);
          d.add(points[1], f1);
          d.add(points[2], finf + Rational(k, 1));
          const ConeTriple t(d);
          if (!is_member(t, catalog.epsilon0, n)) continue;
          const std::string key = canonical_form(d).str();
          if (!known.contains(key)) missing.insert(key);
        }
      }
    }
  }
  return {missing.begin(), missing.end()};
}

PaperCheckReport paper_check(const PaperCheckConfig& config) {
  PaperCheckReport report;
  auto add = [&](std::string name, bool ok, std::string expected, std::string actual) {
    report.results.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
  };
  auto guarded = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      add(name, false, "no error", ex.what());
    }
  };

  for (std::int64_t d = 2; d <= 50; ++d) {
    const std::string tag = "cone_rational_curve/d=" + std::to_string(d);
    guarded(tag, [&] {
      const ConeTriple t(QDivisorP1::point(PointP1::infinity(), Rational(d)));
      const DualGraph graph = build_graph(normalize_seifert(t.polarization()));
      const DiscrepancyReport r = config.solver(graph);
      const Rational expected(2, d);
      add(tag + "/mld", r.mld == expected, expected.str(), r.mld.str());
      add(tag + "/fano_angle", fano_angle(t) == Rational(d, 2), Rational(d, 2).str(),
          fano_angle(t).str());
      add(tag + "/vertex_vs_central", r.log_discrepancies[graph.central()] == vertex_log_discrepancy(t),
          vertex_log_discrepancy(t).str(), r.log_discrepancies[graph.central()].str());
    });
  }

  for (std::int64_t n = 1; n <= 20; ++n) {
    const std::string tag = "an_plt_blowups/n=" + std::to_string(n);
    guarded(tag, [&] {
      const AnBoundsReport r = verify_example_bounds(n, 4 * n);
      add(tag + "/a_plus_b", r.sum_bound_holds && r.equality_on_minimal_resolution,
          "a+b >= n+1, equality on minimal resolution rays",
          r.violations.empty() ? "ok" : r.violations.front());
      const Rational sharp(1, (n + 2) / 2);
      add(tag + "/max_threshold", r.max_threshold == sharp && r.below_two_over_n, sharp.str(),
          r.max_threshold.str());
    });
  }

  for (std::int64_t n = 4; n <= 8; ++n) {
    const std::string tag = "tjurina_family/n=" + std::to_string(n);
    guarded(tag, [&] {
      const auto tju = tjurina_family(n, Rational(1));
      add(tag, tju == static_cast<std::uint64_t>(n + 2), std::to_string(n + 2),
          std::to_string(tju));
    });
  }
  guarded("tjurina_family/n=6,t=2/3", [&] {
    const auto tju = tjurina_family(6, Rational(2, 3));
    add("tjurina_family/n=6,t=2/3", tju == 8, "8", std::to_string(tju));
  });
  {
    std::string actual = "no error";
    try {
      actual = std::to_string(tjurina(tjurina_family_poly(4, Rational(0))));
    } catch (const NotIsolated&) {
      actual = "NOT_ISOLATED";
    } catch (const std::exception& ex) {
      actual = ex.what();
    }
    add("tjurina_family/t=0", actual == "NOT_ISOLATED", "NOT_ISOLATED", actual);
  }

  struct Run {
    Rational epsilon0;
    std::int64_t n;
    std::int64_t expected_size;  // -1 when not pinned
  };
  const Run runs[] = {{Rational(1), 1, 2}, {Rational(1), 2, -1}, {Rational(1, 2), 1, 4},
                      {Rational(1, 2), 2, -1}};
  for (const auto& run : runs) {
    const std::string tag = "catalog/eps0=" + run.epsilon0.str() + ",N=" + std::to_string(run.n);
    guarded(tag, [&] {
      const Catalog c = enumerate_catalog(run.epsilon0, run.n, {config.a_infinity_shift});
      if (run.expected_size >= 0) {
        add(tag + "/size", c.entries.size() == static_cast<std::size_t>(run.expected_size),
            std::to_string(run.expected_size), std::to_string(c.entries.size()));
      }
      const ConsistencyReport consistency = catalog_consistency_check(c.entries, run.n);
      add(tag + "/consistency", consistency.passed(), "0 failures",
          std::to_string(consistency.failures.size()) + " failures");
      const auto missing = missing_from_catalog(c);
      add(tag + "/completeness", missing.empty(), "none missing",
          missing.empty() ? "none missing" : "missing " + missing.front());
    });
  }
  return report;
}

}  // namespace conesing::cli
