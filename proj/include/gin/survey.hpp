// Survey runner: a grid of (n, d_1..d_s) cases, one row per case with the
// initial ideal and its classification, persisted as JSON lines plus a CSV
// summary.
//
// survey.jsonl is append-only and keyed by case + seed: re-running a grid adds
// only rows whose key is new. survey.csv is regenerated from survey.jsonl.
//
// CSV columns, in order:
//   n,s,degrees,order,route,field,gin,is_lexsegment,is_weakly_revlex,
//   is_borel_fixed,maxdeg_gin,maxgbdeg_bound,seeds,agreement,runtime_ms,error
// List-valued cells (degrees, seeds) are ';'-separated.
#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gin/generic.hpp"
#include "gin/io.hpp"
#include "gin/properties.hpp"
#include "gin/series.hpp"

namespace gin {

struct SurveyCase {
  std::size_t n = 0;
  std::vector<unsigned> degrees;
};

struct SurveyConfig {
  OrderKind order = OrderKind::lex;
  Route route = Route::sampling;
  std::uint64_t seed = 0;
  std::size_t trials = 5;
  /// Sampling falls back to Q with B = 99 when fewer than this fraction of
  /// trials agree over GF(32003).
  std::size_t min_agree_num = 4, min_agree_den = 5;
  bool parametric_over_q = true;
  OrderKind param_order = OrderKind::degrevlex;
  Budget budget;
  std::size_t jobs = 1;
};

struct SurveyRow {
  std::size_t n = 0;
  std::vector<unsigned> degrees;
  std::string order;
  std::string route;
  std::string field;
  std::optional<MonomialIdeal> gin;
  bool is_lexsegment = false;
  bool is_weakly_revlex = false;
  bool is_borel_fixed = false;
  unsigned maxdeg_gin = 0;
  unsigned maxgbdeg_bound = 0;
  bool bound_horizon_uncertain = false;
  std::vector<std::uint64_t> seeds;
  std::size_t agreement = 0;
  std::int64_t runtime_ms = 0;
  std::string error;
  std::uint64_t seed = 0;

  bool ok() const { return error.empty(); }
};

/// Expands ranges into cases: every n, every s, and every tuple in
/// degree_values^s (ordered tuples, so (2,3) and (3,2) are distinct cases).
inline std::vector<SurveyCase> expand_grid(const std::vector<std::size_t>& ns, const std::vector<std::size_t>& ss,
                                           const std::vector<unsigned>& degree_values) {
  std::vector<SurveyCase> out;
  if (degree_values.empty()) return out;
  for (auto n : ns)
    for (auto s : ss) {
      if (s == 0) continue;
      std::vector<std::size_t> idx(s, 0);
      while (true) {
        SurveyCase c{n, {}};
        for (auto k : idx) c.degrees.push_back(degree_values[k]);
        out.push_back(std::move(c));
        std::size_t pos = s;
        while (pos > 0 && ++idx[pos - 1] == degree_values.size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
  return out;
}

inline std::string join(const auto& values, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

inline std::string survey_key(std::size_t n, const std::vector<unsigned>& degrees, const std::string& order,
                              const std::string& route, std::uint64_t seed) {
  return "n=" + std::to_string(n) + ";d=" + join(degrees, ",") + ";order=" + order + ";route=" + route +
         ";seed=" + std::to_string(seed);
}

inline std::string survey_key(const SurveyRow& r) { return survey_key(r.n, r.degrees, r.order, r.route, r.seed); }

namespace detail {

inline void classify(SurveyRow& row, const GinResult& res, std::uint64_t characteristic) {
  row.field = res.field;
  row.gin = res.ideal;
  row.seeds = res.seeds;
  row.agreement = res.agreement;
  row.is_lexsegment = is_lexsegment(res.ideal).holds;
  row.is_weakly_revlex = is_weakly_revlex(res.ideal).holds;
  row.is_borel_fixed = is_borel_fixed(res.ideal, characteristic).holds;
  row.maxdeg_gin = res.ideal.is_zero() ? 0 : res.ideal.maxdeg();
  auto lex = lexsegment_of_froeberg(row.n, row.degrees);
  row.maxgbdeg_bound = lex.ideal.is_zero() ? 0 : lex.ideal.maxdeg();
  row.bound_horizon_uncertain = lex.horizon_uncertain;
}

}  // namespace detail

/// Runs one case. Failures (inconclusive vote, exhausted budget, ...) are
/// recorded in `error`; the row is still returned.
inline SurveyRow run_survey_case(const SurveyCase& c, const SurveyConfig& cfg) {
  SurveyRow row;
  row.n = c.n;
  row.degrees = c.degrees;
  row.order = std::string(to_string(cfg.order));
  row.route = to_string(cfg.route);
  row.seed = cfg.seed;
  auto start = std::chrono::steady_clock::now();
  try {
    GenericInstance inst(c.n, c.degrees);
    if (cfg.route == Route::sampling) {
      SamplingOptions opt;
      opt.trials = cfg.trials;
      opt.seed = cfg.seed;
      opt.budget = cfg.budget;
      std::optional<GinResult> res;
      try {
        res = gin_by_sampling<GF32003>(inst, cfg.order, opt);
      } catch (const Inconclusive&) {
      }
      if (res && res->agreement * cfg.min_agree_den >= cfg.min_agree_num * cfg.trials) {
        detail::classify(row, *res, GF32003::kCharacteristic);
      } else {
        opt.bound = 99;
        detail::classify(row, gin_by_sampling<Rational>(inst, cfg.order, opt), 0);
      }
    } else {
      ParametricOptions opt;
      opt.param_order = cfg.param_order;
      opt.budget = cfg.budget;
      if (cfg.parametric_over_q)
        detail::classify(row, gin_parametric<Rational>(inst, cfg.order, opt), 0);
      else
        detail::classify(row, gin_parametric<GF32003>(inst, cfg.order, opt), GF32003::kCharacteristic);
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return row;
}

inline Json to_json(const SurveyRow& r) {
  Json j{{"schema", kSchemaVersion},
         {"key", survey_key(r)},
         {"n", r.n},
         {"s", r.degrees.size()},
         {"degrees", r.degrees},
         {"order", r.order},
         {"route", r.route},
         {"field", r.field}};
  j["gin"] = r.gin ? to_json(*r.gin) : Json(nullptr);
  j["is_lexsegment"] = r.is_lexsegment;
  j["is_weakly_revlex"] = r.is_weakly_revlex;
  j["is_borel_fixed"] = r.is_borel_fixed;
  j["maxdeg_gin"] = r.maxdeg_gin;
  j["maxgbdeg_bound"] = r.maxgbdeg_bound;
  j["bound_horizon_uncertain"] = r.bound_horizon_uncertain;
  j["seed"] = r.seed;
  j["seeds"] = r.seeds;
  j["agreement"] = r.agreement;
  j["runtime_ms"] = r.runtime_ms;
  j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
  return j;
}

inline SurveyRow survey_row_from_json(const Json& j) {
  SurveyRow r;
  try {
    r.n = j.at("n").get<std::size_t>();
    r.degrees = j.at("degrees").get<std::vector<unsigned>>();
    r.order = j.at("order").get<std::string>();
    r.route = j.at("route").get<std::string>();
    r.field = j.at("field").get<std::string>();
    if (!j.at("gin").is_null()) r.gin = monomial_ideal_from_json(j.at("gin"));
    r.is_lexsegment = j.at("is_lexsegment").get<bool>();
    r.is_weakly_revlex = j.at("is_weakly_revlex").get<bool>();
    r.is_borel_fixed = j.at("is_borel_fixed").get<bool>();
    r.maxdeg_gin = j.at("maxdeg_gin").get<unsigned>();
    r.maxgbdeg_bound = j.at("maxgbdeg_bound").get<unsigned>();
    r.bound_horizon_uncertain = j.value("bound_horizon_uncertain", false);
    r.seed = j.at("seed").get<std::uint64_t>();
    r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    r.agreement = j.at("agreement").get<std::size_t>();
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed survey row: ") + e.what());
  }
  return r;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kSurveyCsvHeader =
    "n,s,degrees,order,route,field,gin,is_lexsegment,is_weakly_revlex,is_borel_fixed,maxdeg_gin,maxgbdeg_bound,seeds,"
    "agreement,runtime_ms,error";

inline std::string to_csv(const SurveyRow& r) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream os;
  os << r.n << ',' << r.degrees.size() << ',' << join(r.degrees, ";") << ',' << r.order << ',' << r.route << ','
     << r.field << ',' << csv_quote(r.gin ? r.gin->to_string() : "") << ',' << b(r.is_lexsegment) << ','
     << b(r.is_weakly_revlex) << ',' << b(r.is_borel_fixed) << ',' << r.maxdeg_gin << ',' << r.maxgbdeg_bound << ','
     << join(r.seeds, ";") << ',' << r.agreement << ',' << r.runtime_ms << ',' << csv_quote(r.error);
  return os.str();
}

/// Reads every row of a survey.jsonl file (missing file: no rows).
inline std::vector<SurveyRow> read_survey_rows(const std::filesystem::path& jsonl) {
  std::vector<SurveyRow> rows;
  std::ifstream in(jsonl);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed line in ") + jsonl.string() + ": " + e.what());
    }
    rows.push_back(survey_row_from_json(j));
  }
  return rows;
}

/// Appends rows to <dir>/survey.jsonl in case order as they complete, skipping
/// keys already present. All writes go through one mutex.
class SurveyWriter {
 public:
  explicit SurveyWriter(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
    for (const auto& r : read_survey_rows(jsonl_path())) known_.insert(survey_key(r));
    out_.open(jsonl_path(), std::ios::app);
    if (!out_) throw std::runtime_error("cannot open " + jsonl_path().string());
  }

  std::filesystem::path jsonl_path() const { return dir_ / "survey.jsonl"; }
  std::filesystem::path csv_path() const { return dir_ / "survey.csv"; }

  bool has(const std::string& key) const {
    std::lock_guard lock(mu_);
    return known_.count(key) != 0;
  }

  /// Row `index` of the current run is ready; flushes the longest in-order
  /// prefix so that file order never depends on thread timing.
  void submit(std::size_t index, std::optional<SurveyRow> row) {
    std::lock_guard lock(mu_);
    pending_.emplace(index, std::move(row));
    while (!pending_.empty() && pending_.begin()->first == next_) {
      auto& r = pending_.begin()->second;
      if (r && known_.insert(survey_key(*r)).second) {
        out_ << to_json(*r).dump() << '\n';
        ++appended_;
      }
      pending_.erase(pending_.begin());
      ++next_;
    }
    out_.flush();
  }

  std::size_t appended() const {
    std::lock_guard lock(mu_);
    return appended_;
  }

  /// Rewrites survey.csv from the full JSON-lines history.
  void write_csv() {
    std::lock_guard lock(mu_);
    out_.flush();
    std::ofstream csv(csv_path(), std::ios::trunc);
    auto rows = read_survey_rows(jsonl_path());
    if (rows.empty()) return;
    csv << kSurveyCsvHeader << '\n';
    for (const auto& r : rows) csv << to_csv(r) << '\n';
  }

 private:
  std::filesystem::path dir_;
  std::ofstream out_;
  mutable std::mutex mu_;
  std::set<std::string> known_;
  std::map<std::size_t, std::optional<SurveyRow>> pending_;
  std::size_t next_ = 0;
  std::size_t appended_ = 0;
};

struct SurveyOutcome {
  std::vector<SurveyRow> rows;  // this run's rows, in case order (skipped cases omitted)
  std::size_t appended = 0;
  std::size_t skipped = 0;
};

/// Runs every case not already persisted, on cfg.jobs worker threads.
inline SurveyOutcome run_survey(const std::vector<SurveyCase>& cases, const SurveyConfig& cfg,
                                const std::filesystem::path& out_dir,
                                const std::function<void(const SurveyRow&)>& progress = {}) {
  SurveyWriter writer(out_dir);
  std::vector<std::optional<SurveyRow>> results(cases.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> skipped{0};
  std::mutex progress_mu;
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      const auto& c = cases[k];
      if (writer.has(survey_key(c.n, c.degrees, std::string(to_string(cfg.order)), to_string(cfg.route), cfg.seed))) {
        ++skipped;
        writer.submit(k, std::nullopt);
        continue;
      }
      auto row = run_survey_case(c, cfg);
      results[k] = row;
      if (progress) {
        std::lock_guard lock(progress_mu);
        progress(row);
      }
      writer.submit(k, std::move(row));
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, cases.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  writer.write_csv();
  SurveyOutcome out;
  for (auto& r : results)
    if (r) out.rows.push_back(std::move(*r));
  out.appended = writer.appended();
  out.skipped = skipped;
  return out;
}

}  // namespace gin
