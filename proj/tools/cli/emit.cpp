#include "emit.hpp"

#include "conesing/error.hpp"

#include <sstream>

namespace conesing::cli {

namespace {

Json seifert_json(const SeifertData& s) {
  Json branches = Json::array();
  for (const auto& br : s.branches()) branches.push_back({{"alpha", br.alpha}, {"beta", br.beta}});
  return {{"b", s.b()}, {"branches", std::move(branches)}};
}

Json ray_json(const LatticePoint& v) { return Json::array({v.x, v.y}); }

}  // namespace

Json summary_json(const ConeSummary& s) {
  return {{"degree", s.degree.str()},
          {"fano_angle", s.fano_angle.str()},
          {"vertex_log_discrepancy", s.vertex_log_discrepancy.str()},
          {"cartier_index", s.cartier_index},
          {"max_isotropy", s.max_isotropy}};
}

Json resolution_json(const DualGraph& g, const DiscrepancyReport& r) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    nodes.push_back({{"index", i},
                     {"self_intersection", g.nodes()[i].self_intersection},
                     {"central", g.nodes()[i].is_central},
                     {"log_discrepancy", r.log_discrepancies[i].str()}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
  Json lds = Json::array();
  for (const auto& a : r.log_discrepancies) lds.push_back(a.str());
  return {{"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"log_discrepancies", std::move(lds)},
          {"mld", r.mld.str()},
          {"is_klt", r.is_klt},
          {"canonical_index", r.canonical_index}};
}

std::string resolution_dot(const DualGraph& g, const DiscrepancyReport& r) {
  std::ostringstream out;
  out << "digraph resolution {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << "  E_" << i << " [label=\"E_" << i << ": " << g.nodes()[i].self_intersection << ", "
        << r.log_discrepancies[i] << "\"";
    if (g.nodes()[i].is_central) out << ", shape=box";
    out << "];\n";
  }
  for (const auto& [a, b] : g.edges()) out << "  E_" << a << " -> E_" << b << ";\n";
  out << "}\n";
  return out.str();
}

Json catalog_json(const Catalog& catalog) {
  Json entries = Json::array();
  for (const auto& e : catalog.entries) {
    entries.push_back({{"divisor", e.triple.polarization().str()},
                       {"seifert", seifert_json(e.seifert)},
                       {"mld", e.mld.str()},
                       {"fano_angle", e.fano_angle.str()},
                       {"max_isotropy", e.max_isotropy},
                       {"canonical_index", e.canonical_index}});
  }
  return {{"epsilon0", catalog.epsilon0.str()},
          {"N", catalog.isotropy_bound},
          {"entries", std::move(entries)}};
}

Catalog catalog_from_json(const Json& doc) {
  try {
    Catalog catalog;
    catalog.epsilon0 = Rational::parse(doc.at("epsilon0").get<std::string>());
    catalog.isotropy_bound = doc.at("N").get<std::int64_t>();
    if (catalog.isotropy_bound < 1) throw InvalidInput("catalog N must be >= 1");
    for (std::int64_t q = 2; q <= catalog.isotropy_bound; ++q) {
      catalog.denominator = lcm64(catalog.denominator, q);
    }
    for (const auto& e : doc.at("entries")) {
      std::vector<SeifertBranch> branches;
      for (const auto& br : e.at("seifert").at("branches")) {
        branches.push_back({br.at("alpha").get<std::int64_t>(), br.at("beta").get<std::int64_t>()});
      }
      catalog.entries.push_back(
          {ConeTriple(QDivisorP1::parse(e.at("divisor").get<std::string>())),
           SeifertData(e.at("seifert").at("b").get<std::int64_t>(), std::move(branches)),
           Rational::parse(e.at("mld").get<std::string>()),
           Rational::parse(e.at("fano_angle").get<std::string>()),
           e.at("max_isotropy").get<std::int64_t>(),
           e.at("canonical_index").get<std::int64_t>()});
    }
    return catalog;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("catalog JSON schema error: ") + ex.what());
  }
}

Json an_blowups_json(const std::vector<PltBlowupRecord>& rows, const AnBoundsReport& report) {
  Json out_rows = Json::array();
  for (const auto& r : rows) {
    out_rows.push_back({{"ray", ray_json(r.ray)},
                        {"a", r.a},
                        {"b", r.b},
                        {"diff", Json::array({r.diff.first.str(), r.diff.second.str()})},
                        {"threshold", r.delta_threshold.str()}});
  }
  return {{"n", report.n},
          {"bound", report.height_bound},
          {"rows", std::move(out_rows)},
          {"max_threshold", report.max_threshold.str()},
          {"argmax_ray", ray_json(report.argmax_ray)},
          {"max_strictly_inside", report.max_strictly_inside},
          {"sum_bound_holds", report.sum_bound_holds},
          {"equality_on_minimal_resolution", report.equality_on_minimal_resolution},
          {"below_two_over_n", report.below_two_over_n}};
}

}  // namespace conesing::cli
