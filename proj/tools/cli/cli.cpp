#include "cli.hpp"

#include "emit.hpp"
#include "paper_check.hpp"

#include "conesing/cone.hpp"
#include "conesing/divisor.hpp"
#include "conesing/enumeration.hpp"
#include "conesing/error.hpp"
#include "conesing/groebner.hpp"
#include "conesing/polynomial.hpp"
#include "conesing/resolution.hpp"
#include "conesing/toric_an.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace conesing::cli {

namespace {

struct FlagSpec {
  std::string name;
  std::string help;
  bool required = false;
};

struct SubcommandSpec {
  std::string name;
  std::string help;
  std::vector<FlagSpec> flags;
  std::vector<Format> formats;  ///< first entry is the default
};

const std::vector<SubcommandSpec>& subcommands() {
  static const std::vector<SubcommandSpec> specs = {
      {"mld", "minimal log discrepancy of the cone over P1 polarized by D",
       {{"divisor", "polarization, e.g. 0:1/2,inf:1", true}},
       {Format::Text, Format::Json}},
      {"resolve", "minimal resolution graph with log discrepancies",
       {{"divisor", "polarization", true}},
       {Format::Text, Format::Json, Format::Dot}},
      {"fano-angle", "Fano angle of (D; B)",
       {{"divisor", "polarization", true}, {"boundary", "boundary divisor, coefficients in [0,1)"}},
       {Format::Text, Format::Json}},
      {"isotropy", "maximal isotropy of (D; B)",
       {{"divisor", "polarization", true}, {"boundary", "boundary divisor"}},
       {Format::Text, Format::Json}},
      {"veronese", "degree-m Veronese subcone (D -> mD)",
       {{"divisor", "polarization", true}, {"boundary", "boundary divisor"},
        {"m", "Veronese degree", true}},
       {Format::Text, Format::Json}},
      {"degenerate", "central fiber of the vertex plt blow-up degeneration",
       {{"divisor", "polarization", true}, {"m", "Cartier index of E (default: minimal)"}},
       {Format::Text, Format::Json}},
      {"enumerate", "catalog of cones with mld >= epsilon0 and isotropy <= N",
       {{"epsilon0", "lower mld bound p/q", true}, {"isotropy", "isotropy bound N", true},
        {"json", "also write the catalog JSON to this path"},
        {"dot", "also write one DOT resolution graph per entry into this directory"}},
       {Format::Text, Format::Json}},
      {"an-blowups", "toric plt blow-ups of the A_n singularity",
       {{"n", "A_n index", true}, {"bound", "height bound (default 4n)"}},
       {Format::Text, Format::Json}},
      {"tjurina", "Tjurina number of an isolated hypersurface singularity at the origin",
       {{"poly", "polynomial, e.g. x^2+y^2+z^3+z^2*w+w^4"},
        {"family-n", "use the family x^2+y^2+z^3+t z^2 w+w^n"},
        {"t", "family parameter (default 1)"}},
       {Format::Text, Format::Json}},
      {"paper-check", "regression suite over the worked examples and catalogs",
       {},
       {Format::Text, Format::Json}},
  };
  return specs;
}

const SubcommandSpec& spec_for(const std::string& name) {
  for (const auto& s : subcommands()) {
    if (s.name == name) return s;
  }
  throw UsageError("unknown subcommand: " + name);
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Dot: return "dot";
  }
  return "text";
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "dot") return Format::Dot;
  throw UsageError("--format must be text, json or dot, got '" + text + "'");
}

// Typed flag access; conversion failures are usage errors.
class Flags {
 public:
  explicit Flags(const RunConfig& config) : options_(config.options) {}

  bool has(const std::string& name) const { return options_.contains(name); }

  const std::string& text(const std::string& name) const {
    auto it = options_.find(name);
    if (it == options_.end()) throw UsageError("missing --" + name);
    return it->second;
  }

  std::int64_t integer(const std::string& name) const {
    const std::string& s = text(name);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw UsageError("--" + name + " expects an integer, got '" + s + "'");
    }
    return value;
  }

  Rational rational(const std::string& name) const {
    return convert(name, [](const std::string& s) { return Rational::parse(s); });
  }

  QDivisorP1 divisor(const std::string& name) const {
    return convert(name, [](const std::string& s) { return QDivisorP1::parse(s); });
  }

  QDivisorP1 divisor_or_empty(const std::string& name) const {
    return has(name) ? divisor(name) : QDivisorP1{};
  }

 private:
  template <typename F>
  auto convert(const std::string& name, F parse) const -> decltype(parse(std::string())) {
    const std::string& s = text(name);
    try {
      return parse(s);
    } catch (const Error& e) {
      throw UsageError("--" + name + ": " + e.what());
    }
  }

  const std::map<std::string, std::string>& options_;
};

struct Document {
  std::string body;
  int status = 0;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << body;
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

std::string summary_text_divisor(const ConeTriple& t) {
  std::string s = t.polarization().str();
  if (!t.boundary().empty()) s += " ; " + t.boundary().str();
  return s + "\n";
}

Document run_mld(const RunConfig& c, const Flags& f) {
  const DiscrepancyReport r = resolve(ConeTriple(f.divisor("divisor")));
  if (c.format == Format::Json) return {dump(Json{{"mld", r.mld.str()}})};
  return {r.mld.str() + "\n"};
}

Document run_resolve(const RunConfig& c, const Flags& f) {
  const ConeTriple t(f.divisor("divisor"));
  const DualGraph g = build_graph(normalize_seifert(t.polarization()));
  const DiscrepancyReport r = discrepancies(g);
  if (c.format == Format::Json) return {dump(resolution_json(g, r))};
  if (c.format == Format::Dot) return {resolution_dot(g, r)};
  std::ostringstream out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << "E_" << i << ": " << g.nodes()[i].self_intersection << ", " << r.log_discrepancies[i]
        << (g.nodes()[i].is_central ? " (central)" : "") << "\n";
  }
  for (const auto& [a, b] : g.edges()) out << "E_" << a << " -- E_" << b << "\n";
  out << "mld " << r.mld << "\ncanonical_index " << r.canonical_index << "\n";
  return {out.str()};
}

Document run_fano_angle(const RunConfig& c, const Flags& f) {
  const ConeTriple t(f.divisor("divisor"), f.divisor_or_empty("boundary"));
  if (c.format == Format::Json) return {dump(summary_json(summarize(t)))};
  return {fano_angle(t).str() + "\n"};
}

Document run_isotropy(const RunConfig& c, const Flags& f) {
  const ConeTriple t(f.divisor("divisor"), f.divisor_or_empty("boundary"));
  if (c.format == Format::Json) return {dump(summary_json(summarize(t)))};
  return {std::to_string(max_isotropy(t)) + "\n"};
}

Document run_veronese(const RunConfig& c, const Flags& f) {
  const ConeTriple t(f.divisor("divisor"), f.divisor_or_empty("boundary"));
  const ConeTriple v = veronese(t, f.integer("m"));
  if (c.format == Format::Json) return {dump(summary_json(summarize(v)))};
  return {summary_text_divisor(v)};
}

Document run_degenerate(const RunConfig& c, const Flags& f) {
  PltBlowupData data = vertex_blowup_data(ConeTriple(f.divisor("divisor")));
  if (f.has("m")) data.m = f.integer("m");
  const CentralFiber fiber = central_fiber_of_plt_blowup(data);
  if (c.format == Format::Json) return {dump(summary_json(summarize(fiber.cone)))};
  return {summary_text_divisor(fiber.cone)};
}

Document run_enumerate(const RunConfig& c, const Flags& f) {
  const Catalog catalog = enumerate_catalog(f.rational("epsilon0"), f.integer("isotropy"));
  const Json doc = catalog_json(catalog);
  if (f.has("json")) write_file(f.text("json"), dump(doc));
  if (f.has("dot")) {
    const std::filesystem::path dir = f.text("dot");
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
      const DualGraph g = build_graph(catalog.entries[i].seifert);
      write_file(dir / ("entry_" + std::to_string(i) + ".dot"), resolution_dot(g, discrepancies(g)));
    }
  }
  if (c.format == Format::Json) return {dump(doc)};
  std::ostringstream out;
  for (const auto& e : catalog.entries) {
    out << e.triple.polarization().str() << "\t" << e.seifert.str() << "\tmld=" << e.mld
        << "\tr=" << e.fano_angle << "\tisotropy=" << e.max_isotropy
        << "\tindex=" << e.canonical_index << "\n";
  }
  out << catalog.entries.size() << " entries (" << catalog.candidates << " candidates)\n";
  return {out.str()};
}

Document run_an_blowups(const RunConfig& c, const Flags& f) {
  const std::int64_t n = f.integer("n");
  const std::int64_t bound = f.has("bound") ? f.integer("bound") : 4 * n;
  const auto rows = enumerate_plt_blowups(n, bound);
  const AnBoundsReport report = verify_example_bounds(n, bound);
  if (c.format == Format::Json) return {dump(an_blowups_json(rows, report))};
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "(" << r.ray.x << "," << r.ray.y << ")\ta=" << r.a << "\tb=" << r.b << "\tdiff=("
        << r.diff.first << "," << r.diff.second << ")\tthreshold=" << r.delta_threshold << "\n";
  }
  out << "max_threshold " << report.max_threshold << " at (" << report.argmax_ray.x << ","
      << report.argmax_ray.y << ")\n";
  return {out.str()};
}

Document run_tjurina(const RunConfig& c, const Flags& f) {
  if (f.has("poly") == f.has("family-n")) {
    throw UsageError("tjurina needs exactly one of --poly or --family-n");
  }
  if (f.has("t") && !f.has("family-n")) throw UsageError("--t only applies with --family-n");
  Poly p = f.has("poly")
               ? [&] {
                   try {
                     return Poly::parse(f.text("poly"));
                   } catch (const Error& e) {
                     throw UsageError(std::string("--poly: ") + e.what());
                   }
                 }()
               : tjurina_family_poly(f.integer("family-n"),
                                     f.has("t") ? f.rational("t") : Rational(1));
  const std::uint64_t value =
      f.has("family-n") ? tjurina_family(f.integer("family-n"),
                                         f.has("t") ? f.rational("t") : Rational(1))
                        : tjurina(p);
  if (c.format == Format::Json) {
    return {dump(Json{{"polynomial", p.str()}, {"tjurina", value}})};
  }
  return {std::to_string(value) + "\n"};
}

Document run_paper_check(const RunConfig& c, const Flags&) {
  const PaperCheckReport report = paper_check();
  const int status = report.passed() ? 0 : 1;
  if (c.format == Format::Json) {
    Json results = Json::array();
    for (const auto& r : report.results) {
      results.push_back(
          {{"name", r.name}, {"passed", r.passed}, {"expected", r.expected}, {"actual", r.actual}});
    }
    return {dump(Json{{"passed", report.passed()},
                      {"failures", report.failures()},
                      {"results", std::move(results)}}),
            status};
  }
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << " expected=" << r.expected << " actual=" << r.actual;
    out << "\n";
  }
  out << report.results.size() - report.failures() << "/" << report.results.size()
      << " passed\n";
  return {out.str(), status};
}

using Handler = std::function<Document(const RunConfig&, const Flags&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"mld", run_mld},           {"resolve", run_resolve},       {"fano-angle", run_fano_angle},
      {"isotropy", run_isotropy}, {"veronese", run_veronese},     {"degenerate", run_degenerate},
      {"enumerate", run_enumerate}, {"an-blowups", run_an_blowups}, {"tjurina", run_tjurina},
      {"paper-check", run_paper_check},
  };
  return table;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact invariants of surface cone singularities", "conesing"};
  app.require_subcommand(1, 1);

  struct Slot {
    CLI::App* app;
    std::map<std::string, CLI::Option*> options;
    std::map<std::string, std::string> values;
    std::string format;
    std::string output;
    CLI::Option* format_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* json_flag = nullptr;
  };
  std::map<std::string, Slot> slots;
  for (const auto& spec : subcommands()) {
    Slot& slot = slots[spec.name];
    slot.app = app.add_subcommand(spec.name, spec.help);
    for (const auto& flag : spec.flags) {
      auto* opt = slot.app->add_option("--" + flag.name, slot.values[flag.name], flag.help);
      if (flag.required) opt->required();
      slot.options[flag.name] = opt;
    }
    std::vector<std::string> names;
    for (Format fmt : spec.formats) names.push_back(format_name(fmt));
    slot.format_opt = slot.app->add_option("--format", slot.format, "output format")
                          ->check(CLI::IsMember(names));
    slot.out_opt = slot.app->add_option("--out", slot.output, "write the document to this path");
    if (spec.name == "an-blowups") {
      slot.json_flag = slot.app->add_flag("--json", "shorthand for --format json");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (auto& [name, slot] : slots) {
    if (!slot.app->parsed()) continue;
    RunConfig config;
    config.subcommand = name;
    for (const auto& [flag, opt] : slot.options) {
      if (opt->count() > 0) config.options[flag] = slot.values[flag];
    }
    const SubcommandSpec& spec = spec_for(name);
    config.format = spec.formats.front();
    if (slot.format_opt->count() > 0) config.format = parse_format(slot.format);
    if (slot.json_flag != nullptr && slot.json_flag->count() > 0) {
      if (slot.format_opt->count() > 0 && config.format != Format::Json) {
        throw UsageError("--json conflicts with --format " + slot.format);
      }
      config.format = Format::Json;
    }
    if (slot.out_opt->count() > 0) config.output = slot.output;
    return config;
  }
  throw UsageError("no subcommand given");
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const SubcommandSpec& spec = spec_for(config.subcommand);
    if (std::find(spec.formats.begin(), spec.formats.end(), config.format) ==
        spec.formats.end()) {
      throw UsageError(config.subcommand + " cannot emit --format " + format_name(config.format));
    }
    for (const auto& [flag, value] : config.options) {
      const bool known = std::any_of(spec.flags.begin(), spec.flags.end(),
                                     [&](const FlagSpec& s) { return s.name == flag; });
      if (!known) throw UsageError(config.subcommand + " does not accept --" + flag);
    }
    const Flags flags(config);
    const Document doc = handlers().at(config.subcommand)(config, flags);
    if (config.output) {
      write_file(*config.output, doc.body);
    } else {
      out << doc.body;
    }
    return doc.status;
  } catch (const UsageError& e) {
    print_error(err, "USAGE", e.what());
    return 2;
  } catch (const Error& e) {
    print_error(err, std::string(error_kind_name(e.kind())), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error(err, "INTERNAL", e.what());
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const UsageError& e) {
    print_error(err, "USAGE", e.what());
    return 2;
  }
  if (!config) return 0;
  return dispatch(*config, out, err);
}

}  // namespace conesing::cli
