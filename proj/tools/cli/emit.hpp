#pragma once

#include "conesing/cone.hpp"
#include "conesing/enumeration.hpp"
#include "conesing/resolution.hpp"
#include "conesing/toric_an.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace conesing::cli {

using Json = nlohmann::ordered_json;

Json summary_json(const ConeSummary& s);

Json resolution_json(const DualGraph& g, const DiscrepancyReport& r);
std::string resolution_dot(const DualGraph& g, const DiscrepancyReport& r);

/// {epsilon0, N, entries: [{divisor, seifert: {b, branches}, mld, fano_angle, max_isotropy,
/// canonical_index}]}; rationals as "p/q" strings.
Json catalog_json(const Catalog& catalog);
/// Inverse of catalog_json. Entries are re-validated through the ConeTriple and
/// SeifertData constructors; throws InvalidInput on schema errors.
Catalog catalog_from_json(const Json& doc);

Json an_blowups_json(const std::vector<PltBlowupRecord>& rows, const AnBoundsReport& report);

}  // namespace conesing::cli
