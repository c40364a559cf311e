// gin: command-line front end.
//
// Exit codes: 0 success, 1 mathematical failure (inconclusive vote, exhausted
// budget, inadmissible Hilbert function), 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "gin/generic.hpp"
#include "gin/groebner.hpp"
#include "gin/io.hpp"
#include "gin/properties.hpp"
#include "gin/series.hpp"
#include "gin/survey.hpp"

namespace {

using namespace gin;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::trunc);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

OrderKind order_of(const std::string& s) {
  auto k = parse_order_kind(s);
  if (!k || *k == OrderKind::inverse_block) throw UsageError("unknown order '" + s + "'");
  return *k;
}

enum class FieldChoice { q, gf };

FieldChoice field_of(const std::string& s) {
  if (s == "Q" || s == "q" || s == "QQ") return FieldChoice::q;
  if (s == "F32003" || s == "GF32003" || s == "gf" || s == "32003") return FieldChoice::gf;
  throw UsageError("unknown field '" + s + "' (use Q or F32003)");
}

Budget budget_of(std::int64_t ms, std::size_t pairs) {
  Budget b;
  b.wall = std::chrono::milliseconds(ms);
  b.max_pairs = pairs;
  return b;
}

/// "3", "2..4" or "2,3,5". An empty range ("4..3") yields no values.
template <class T>
std::vector<T> parse_range(const std::string& s) {
  std::vector<T> out;
  auto number = [&](const std::string& t) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || t.empty() || v < 0) throw UsageError("bad range '" + s + "'");
    return static_cast<T>(v);
  };
  if (auto dots = s.find(".."); dots != std::string::npos) {
    T lo = number(s.substr(0, dots)), hi = number(s.substr(dots + 2));
    for (T v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item));
  return out;
}

SeriesWindow hf_from_file(const std::string& path) { return series_from_json(read_json(path)); }

// gin ------------------------------------------------------------------------

struct GinArgs {
  std::size_t n = 0;
  std::vector<unsigned> degrees;
  std::string order = "lex";
  std::string route = "sample";
  std::string field;
  std::string t_order = "degrevlex";
  std::uint64_t seed = 0;
  std::size_t trials = 5;
  std::int64_t bound = 0;
  std::optional<std::size_t> horizon;
  std::int64_t budget_ms = 0;
  std::size_t max_pairs = 0;
  std::string out;
};

int cmd_gin(const GinArgs& a) {
  GenericInstance inst(a.n, a.degrees);
  auto order = order_of(a.order);
  Budget budget = budget_of(a.budget_ms, a.max_pairs);
  GinResult res;
  if (a.route == "sample") {
    SamplingOptions opt;
    opt.trials = a.trials;
    opt.seed = a.seed;
    opt.bound = a.bound;
    opt.u_generic_horizon = a.horizon;
    opt.budget = budget;
    res = field_of(a.field.empty() ? "F32003" : a.field) == FieldChoice::gf ? gin_by_sampling<GF32003>(inst, order, opt)
                                                                            : gin_by_sampling<Rational>(inst, order, opt);
  } else if (a.route == "parametric") {
    ParametricOptions opt;
    opt.param_order = order_of(a.t_order);
    opt.budget = budget;
    res = field_of(a.field.empty() ? "Q" : a.field) == FieldChoice::gf ? gin_parametric<GF32003>(inst, order, opt)
                                                                       : gin_parametric<Rational>(inst, order, opt);
  } else {
    throw UsageError("unknown route '" + a.route + "' (use sample or parametric)");
  }
  emit(to_json(res), a.out);
  return 0;
}

// check ----------------------------------------------------------------------

int cmd_check(const std::string& file, const std::string& property, std::uint64_t p, const std::string& out) {
  auto J = monomial_ideal_from_json(read_json(file));
  auto one = [&](const std::string& prop) {
    if (prop == "lexsegment") return to_json(prop, is_lexsegment(J));
    if (prop == "weakly-revlex") return to_json(prop, is_weakly_revlex(J));
    if (prop == "borel") {
      auto j = to_json(prop, is_borel_fixed(J, p));
      j["characteristic"] = p;
      return j;
    }
    throw UsageError("unknown property '" + prop + "' (use lexsegment, weakly-revlex, borel or all)");
  };
  if (property == "all") {
    Json arr = Json::array();
    for (auto prop : {"lexsegment", "weakly-revlex", "borel"}) arr.push_back(one(prop));
    emit(arr, out);
  } else {
    emit(one(property), out);
  }
  return 0;
}

// froeberg / lexseg / bound / hilbert ----------------------------------------

int cmd_froeberg(std::size_t n, const std::vector<unsigned>& degrees, std::optional<std::size_t> horizon,
                 const std::string& out) {
  auto D = horizon.value_or(default_froeberg_horizon(n, degrees));
  emit(to_json(froeberg_series({n, degrees, D})), out);
  return 0;
}

LexsegmentResult lexseg_of_args(std::size_t n, const std::vector<unsigned>& degrees, const std::string& hf_file,
                                std::optional<std::size_t> horizon) {
  if (!hf_file.empty()) {
    auto hf = hf_from_file(hf_file);
    return lexsegment_of_hf(n, hf, horizon.value_or(hf.horizon()));
  }
  if (degrees.empty()) throw UsageError("give either -d degrees or --hf file");
  return lexsegment_of_froeberg(n, degrees, horizon);
}

int cmd_lexseg(std::size_t n, const std::vector<unsigned>& degrees, const std::string& hf_file,
               std::optional<std::size_t> horizon, const std::string& out) {
  auto r = lexseg_of_args(n, degrees, hf_file, horizon);
  Json j{{"schema", kSchemaVersion},
         {"ideal", to_json(r.ideal)},
         {"horizon", r.horizon},
         {"horizon_uncertain", r.horizon_uncertain}};
  emit(j, out);
  return 0;
}

int cmd_bound(std::size_t n, const std::vector<unsigned>& degrees, const std::string& hf_file,
              std::optional<std::size_t> horizon, const std::string& out) {
  auto r = lexseg_of_args(n, degrees, hf_file, horizon);
  emit(Json(r.ideal.is_zero() ? 0u : r.ideal.maxdeg()), out);
  if (r.horizon_uncertain) std::cerr << "warning: horizon " << r.horizon << " may be too small\n";
  return 0;
}

int cmd_hilbert(const std::string& file, std::optional<std::size_t> horizon, const std::string& out) {
  auto J = monomial_ideal_from_json(read_json(file));
  auto w = hilbert_series(J, horizon);
  Json j = to_json(w);
  j["numerator"] = hilbert_numerator(J);
  j["denominator_power"] = J.nvars();
  emit(j, out);
  return 0;
}

// gb -------------------------------------------------------------------------

template <class F>
Json gb_json(const Json& in, const std::string& order_name) {
  RingPtr ring;
  if (in.contains("vars")) {
    ring = Ring::make(in.at("vars").get<std::vector<std::string>>());
  } else if (in.contains("n")) {
    ring = Ring::standard(in.at("n").get<std::size_t>());
  } else {
    throw ParseError("gb input needs \"n\" or \"vars\"");
  }
  if (!in.contains("polys") || !in.at("polys").is_array()) throw ParseError("gb input needs a \"polys\" array");
  auto ord = MonomialOrder::of_kind(order_of(order_name), ring->nvars());
  std::vector<Polynomial<F>> gens;
  for (const auto& p : in.at("polys")) {
    if (p.is_string())
      gens.push_back(parse_polynomial<F>(p.get<std::string>(), ring, ord));
    else
      gens.push_back(polynomial_from_json<F>(p, ring, ord));
  }
  auto G = reduced_groebner_basis(gens, ord);
  Json basis = Json::array(), text = Json::array();
  for (const auto& g : G.generators) {
    basis.push_back(to_json(g));
    text.push_back(g.to_string());
  }
  return Json{{"schema", kSchemaVersion}, {"order", order_name},        {"field", F::name()},
              {"basis", basis},           {"basis_text", text},         {"initial_ideal", to_json(initial_ideal(G, ring->nvars()))}};
}

int cmd_gb(const std::string& file, const std::string& order, const std::string& field, const std::string& out) {
  auto in = read_json(file);
  try {
    emit(field_of(field) == FieldChoice::gf ? gb_json<GF32003>(in, order) : gb_json<Rational>(in, order), out);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("gb input: ") + e.what());
  }
  return 0;
}

// survey ---------------------------------------------------------------------

struct SurveyArgs {
  std::string n_range, s_range, d_values;
  std::string order = "lex";
  std::string route = "sample";
  std::string field;
  std::string t_order = "degrevlex";
  std::uint64_t seed = 0;
  std::size_t trials = 5;
  std::int64_t budget_ms = 0;
  std::size_t max_pairs = 0;
  std::size_t jobs = 0;
  std::string out;
  bool quiet = false;
};

int cmd_survey(const SurveyArgs& a) {
  auto cases = expand_grid(parse_range<std::size_t>(a.n_range), parse_range<std::size_t>(a.s_range),
                           parse_range<unsigned>(a.d_values));
  SurveyConfig cfg;
  cfg.order = order_of(a.order);
  if (a.route == "sample")
    cfg.route = Route::sampling;
  else if (a.route == "parametric")
    cfg.route = Route::parametric;
  else
    throw UsageError("unknown route '" + a.route + "'");
  cfg.seed = a.seed;
  cfg.trials = a.trials;
  cfg.budget = budget_of(a.budget_ms, a.max_pairs);
  cfg.param_order = order_of(a.t_order);
  cfg.parametric_over_q = a.field.empty() || field_of(a.field) == FieldChoice::q;
  cfg.jobs = a.jobs != 0 ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  auto progress = [&](const SurveyRow& r) {
    if (a.quiet) return;
    std::cerr << "n=" << r.n << " d=" << join(r.degrees, ",") << " "
              << (r.ok() ? r.gin->to_string() : "error: " + r.error) << " (" << r.runtime_ms << " ms)\n";
  };
  auto outcome = run_survey(cases, cfg, a.out, progress);
  std::size_t failed = 0, bound_violations = 0;
  for (const auto& r : outcome.rows) {
    failed += !r.ok();
    bound_violations += r.ok() && r.maxdeg_gin > r.maxgbdeg_bound;
  }
  Json summary{{"schema", kSchemaVersion},
               {"cases", cases.size()},
               {"appended", outcome.appended},
               {"skipped", outcome.skipped},
               {"failed", failed},
               {"bound_violations", bound_violations},
               {"jsonl", (std::filesystem::path(a.out) / "survey.jsonl").string()},
               {"csv", (std::filesystem::path(a.out) / "survey.csv").string()}};
  std::cout << summary.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Initial ideals of generic homogeneous ideals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gin 1.0");

  GinArgs g;
  auto* gin_cmd = app.add_subcommand("gin", "initial ideal of the generic ideal of type (n; d)");
  gin_cmd->add_option("-n", g.n, "number of variables")->required()->check(CLI::Range(1, 32));
  gin_cmd->add_option("-d,--degrees", g.degrees, "generator degrees, e.g. 2,2")->required()->delimiter(',')->check(CLI::PositiveNumber);
  gin_cmd->add_option("--order", g.order, "lex, deglex or degrevlex")->capture_default_str();
  gin_cmd->add_option("--route", g.route, "sample or parametric")->capture_default_str();
  gin_cmd->add_option("--field", g.field, "Q or F32003 (default: F32003 for sample, Q for parametric)");
  gin_cmd->add_option("--t-order", g.t_order, "order on the parameters (parametric route)")->capture_default_str();
  gin_cmd->add_option("--seed", g.seed, "first seed; trial k uses seed + k")->capture_default_str();
  gin_cmd->add_option("--trials", g.trials, "sampling trials")->capture_default_str()->check(CLI::PositiveNumber);
  gin_cmd->add_option("--bound", g.bound, "coefficient bound B (default p-1 over F32003, 99 over Q)")->check(CLI::NonNegativeNumber);
  gin_cmd->add_option("--horizon", g.horizon, "degree horizon for the U-genericity check");
  gin_cmd->add_option("--budget-ms", g.budget_ms, "wall-clock budget per Groebner basis, 0 = none")->check(CLI::NonNegativeNumber);
  gin_cmd->add_option("--max-pairs", g.max_pairs, "critical-pair budget, 0 = none");
  gin_cmd->add_option("--out", g.out, "write JSON here instead of stdout");

  std::string check_file, property, check_out;
  std::uint64_t characteristic = 0;
  auto* check_cmd = app.add_subcommand("check", "classify a monomial ideal given as JSON");
  check_cmd->add_option("ideal", check_file, "ideal JSON file, - for stdin")->required();
  check_cmd->add_option("--property", property, "lexsegment, weakly-revlex, borel or all")->required();
  check_cmd->add_option("-p,--characteristic", characteristic, "characteristic for the Borel test")->capture_default_str();
  check_cmd->add_option("--out", check_out, "write JSON here instead of stdout");

  std::size_t sn = 0;
  std::vector<unsigned> sdeg;
  std::optional<std::size_t> shorizon;
  std::string shf, sout;
  auto series_opts = [&](CLI::App* c, bool need_degrees) {
    c->add_option("-n", sn, "number of variables")->required()->check(CLI::Range(1, 32));
    auto* d = c->add_option("-d,--degrees", sdeg, "generator degrees")->delimiter(',')->check(CLI::PositiveNumber);
    if (need_degrees) d->required();
    c->add_option("--horizon", shorizon, "degree horizon");
    c->add_option("--out", sout, "write JSON here instead of stdout");
  };
  auto* froeberg_cmd = app.add_subcommand("froeberg", "Froeberg bracket series");
  series_opts(froeberg_cmd, true);
  auto* lexseg_cmd = app.add_subcommand("lexseg", "lexsegment ideal of a Hilbert function");
  series_opts(lexseg_cmd, false);
  lexseg_cmd->add_option("--hf", shf, "Hilbert function JSON {\"coeffs\": [...]} instead of -d");
  auto* bound_cmd = app.add_subcommand("bound", "maxdeg of the lexsegment ideal (Groebner degree bound)");
  series_opts(bound_cmd, false);
  bound_cmd->add_option("--hf", shf, "Hilbert function JSON instead of -d");

  std::string hfile, hout;
  std::optional<std::size_t> hhorizon;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of S/J for a monomial ideal J");
  hilbert_cmd->add_option("ideal", hfile, "ideal JSON file, - for stdin")->required();
  hilbert_cmd->add_option("--horizon", hhorizon, "last degree to report");
  hilbert_cmd->add_option("--out", hout, "write JSON here instead of stdout");

  std::string gfile, gorder = "degrevlex", gfield = "Q", gout;
  auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of explicit polynomials");
  gb_cmd->add_option("input", gfile, "JSON {\"n\": n, \"polys\": [...]}, - for stdin")->required();
  gb_cmd->add_option("--order", gorder, "lex, deglex or degrevlex")->capture_default_str();
  gb_cmd->add_option("--field", gfield, "Q or F32003")->capture_default_str();
  gb_cmd->add_option("--out", gout, "write JSON here instead of stdout");

  SurveyArgs sv;
  auto* survey_cmd = app.add_subcommand("survey", "run a grid of cases and persist one row per case");
  survey_cmd->add_option("--n", sv.n_range, "variable counts: 3, 2..4 or 3,4")->required();
  survey_cmd->add_option("--s", sv.s_range, "generator counts")->required();
  survey_cmd->add_option("--d", sv.d_values, "degree values; every tuple is a case")->required();
  survey_cmd->add_option("--order", sv.order)->capture_default_str();
  survey_cmd->add_option("--route", sv.route)->capture_default_str();
  survey_cmd->add_option("--field", sv.field, "field for the parametric route (default Q)");
  survey_cmd->add_option("--t-order", sv.t_order)->capture_default_str();
  survey_cmd->add_option("--seed", sv.seed)->capture_default_str();
  survey_cmd->add_option("--trials", sv.trials)->capture_default_str()->check(CLI::PositiveNumber);
  survey_cmd->add_option("--budget-ms", sv.budget_ms)->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--max-pairs", sv.max_pairs);
  survey_cmd->add_option("--jobs", sv.jobs, "worker threads (default: hardware concurrency)");
  survey_cmd->add_option("--out", sv.out, "output directory")->required();
  survey_cmd->add_flag("-q,--quiet", sv.quiet, "no per-case progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gin_cmd) return cmd_gin(g);
    if (*check_cmd) return cmd_check(check_file, property, characteristic, check_out);
    if (*froeberg_cmd) return cmd_froeberg(sn, sdeg, shorizon, sout);
    if (*lexseg_cmd) return cmd_lexseg(sn, sdeg, shf, shorizon, sout);
    if (*bound_cmd) return cmd_bound(sn, sdeg, shf, shorizon, sout);
    if (*hilbert_cmd) return cmd_hilbert(hfile, hhorizon, hout);
    if (*gb_cmd) return cmd_gb(gfile, gorder, gfield, gout);
    if (*survey_cmd) return cmd_survey(sv);
  } catch (const Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 1;
  } catch (const Inadmissible& e) {
    std::cerr << "inadmissible: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
