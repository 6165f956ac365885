#pragma once

// Configuration ingestion, command dispatch, and bit-reproducible report
// emission.  One job per invocation; the envelope is canonical JSON except for
// the timings field, which callers exclude when hashing or comparing.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "satake/report_json.hpp"

namespace satake {

struct JobConfig {
  std::string family = "A";
  int rank = 1;
  std::string preset = "SimplyConnected";
  Int p = 5;
  int f = 1;
  std::vector<int> J;            // 1-based in config files, stored 1-based here
  std::vector<Vec> lambda;       // f vectors in lattice coordinates; empty = zero
  std::string command;
  Caps caps;
  std::string output_format = "json";
  std::optional<std::vector<Int>> chi0;
  std::optional<std::vector<std::vector<int>>> parameters_J;  // 1-based
  bool mt_refined = false;
  std::optional<Mat> raw_simple_roots;
  std::optional<Mat> raw_simple_coroots;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "check",      "kostant",  "group-cohomology", "left-adjoint", "satake",
      "pseries",    "parameters", "oracle-verify",  "report-all"};
  return names;
}

namespace detail {

inline Int get_int(const Json& j, const std::string& key, Int dflt, bool required = false) {
  if (!j.contains(key)) {
    require(!required, ErrorCode::ConfigError, "missing required field '" + key + "'");
    return dflt;
  }
  require(j.at(key).is_number_integer(), ErrorCode::ConfigError,
          "field '" + key + "' must be an integer");
  return j.at(key).get<Int>();
}

inline Mat get_mat(const Json& j, const std::string& key) {
  const Json& a = j.at(key);
  require(a.is_array(), ErrorCode::ConfigError, "field '" + key + "' must be an array of arrays");
  Mat m;
  for (const Json& row : a) {
    require(row.is_array(), ErrorCode::ConfigError, "field '" + key + "' must be an array of arrays");
    Vec v;
    for (const Json& x : row) {
      require(x.is_number_integer(), ErrorCode::ConfigError,
              "field '" + key + "' must contain integers");
      v.push_back(x.get<Int>());
    }
    m.push_back(std::move(v));
  }
  return m;
}

}  // namespace detail

inline JobConfig parse_config(const Json& j) {
  require(j.is_object(), ErrorCode::ConfigError, "config must be a JSON object");
  JobConfig c;
  if (j.contains("family")) {
    require(j.at("family").is_string() && j.at("family").get<std::string>().size() == 1,
            ErrorCode::ConfigError, "field 'family' must be a single letter A..G");
    c.family = j.at("family").get<std::string>();
  }
  c.rank = static_cast<int>(detail::get_int(j, "rank", 1));
  if (j.contains("preset")) {
    require(j.at("preset").is_string(), ErrorCode::ConfigError, "field 'preset' must be a string");
    c.preset = j.at("preset").get<std::string>();
  }
  c.p = detail::get_int(j, "p", 5, true);
  require(is_prime(c.p), ErrorCode::ConfigError, "field 'p' must be a prime");
  c.f = static_cast<int>(detail::get_int(j, "f", 1));
  require(c.f >= 1, ErrorCode::ConfigError, "field 'f' must be >= 1");
  if (j.contains("J")) {
    require(j.at("J").is_array(), ErrorCode::ConfigError, "field 'J' must be an array");
    for (const Json& x : j.at("J")) {
      require(x.is_number_integer(), ErrorCode::ConfigError, "field 'J' must contain integers");
      c.J.push_back(x.get<int>());
    }
  }
  if (j.contains("lambda")) {
    Mat lam = detail::get_mat(j, "lambda");
    for (Vec& v : lam) c.lambda.push_back(std::move(v));
    require(static_cast<int>(c.lambda.size()) == c.f, ErrorCode::ConfigError,
            "field 'lambda' must list exactly f weight vectors");
  }
  if (j.contains("command")) {
    require(j.at("command").is_string(), ErrorCode::ConfigError, "field 'command' must be a string");
    c.command = j.at("command").get<std::string>();
  }
  if (j.contains("caps")) {
    const Json& cp = j.at("caps");
    c.caps.weyl = detail::get_int(cp, "weyl", c.caps.weyl);
    c.caps.underline = detail::get_int(cp, "underline", c.caps.underline);
    c.caps.freudenthal = detail::get_int(cp, "freudenthal", c.caps.freudenthal);
    c.caps.ce = static_cast<int>(detail::get_int(cp, "ce", c.caps.ce));
  }
  if (j.contains("output_format")) {
    c.output_format = j.at("output_format").get<std::string>();
    require(c.output_format == "json" || c.output_format == "text", ErrorCode::ConfigError,
            "field 'output_format' must be 'json' or 'text'");
  }
  if (j.contains("chi0")) {
    std::vector<Int> chi;
    for (const Json& x : j.at("chi0")) {
      require(x.is_number_integer(), ErrorCode::ConfigError, "field 'chi0' must contain integers");
      chi.push_back(x.get<Int>());
    }
    c.chi0 = std::move(chi);
  }
  if (j.contains("parameters_J")) {
    std::vector<std::vector<int>> js;
    for (const Json& row : j.at("parameters_J")) {
      std::vector<int> one;
      for (const Json& x : row) one.push_back(x.get<int>());
      js.push_back(std::move(one));
    }
    c.parameters_J = std::move(js);
  }
  if (j.contains("mt_refined")) {
    require(j.at("mt_refined").is_boolean(), ErrorCode::ConfigError,
            "field 'mt_refined' must be a boolean");
    c.mt_refined = j.at("mt_refined").get<bool>();
  }
  if (j.contains("simple_roots")) c.raw_simple_roots = detail::get_mat(j, "simple_roots");
  if (j.contains("simple_coroots")) c.raw_simple_coroots = detail::get_mat(j, "simple_coroots");
  return c;
}

inline Json config_echo(const JobConfig& c) {
  Json j{{"family", c.family},
         {"rank", c.rank},
         {"preset", c.preset},
         {"p", c.p},
         {"f", c.f},
         {"J", c.J},
         {"command", c.command},
         {"output_format", c.output_format},
         {"mt_refined", c.mt_refined},
         {"caps",
          Json{{"weyl", c.caps.weyl},
               {"underline", c.caps.underline},
               {"freudenthal", c.caps.freudenthal},
               {"ce", c.caps.ce}}}};
  Json lam = Json::array();
  for (const Vec& v : c.lambda) lam.push_back(v);
  j["lambda"] = lam;
  if (c.chi0) j["chi0"] = *c.chi0;
  if (c.parameters_J) j["parameters_J"] = *c.parameters_J;
  if (c.raw_simple_roots) j["simple_roots"] = to_json(*c.raw_simple_roots);
  if (c.raw_simple_coroots) j["simple_coroots"] = to_json(*c.raw_simple_coroots);
  return j;
}

struct JobContext {
  RootDatum datum;
  PositiveRootTable table;
  std::vector<WeylElement> weyl;
  LeviDatum levi;
  UnderlineWeight lambda;
  std::vector<int> J0;  // 0-based
};

inline JobContext make_context(const JobConfig& c) {
  JobContext ctx;
  if (c.preset == "Raw") {
    require(c.raw_simple_roots && c.raw_simple_coroots, ErrorCode::ConfigError,
            "Raw preset requires 'simple_roots' and 'simple_coroots'");
    ctx.datum = build_root_datum_raw(*c.raw_simple_roots, *c.raw_simple_coroots);
  } else {
    LatticePreset preset;
    if (c.preset == "SimplyConnected")
      preset = LatticePreset::SimplyConnected;
    else if (c.preset == "Adjoint")
      preset = LatticePreset::Adjoint;
    else if (c.preset == "GLStyle")
      preset = LatticePreset::GLStyle;
    else
      fail(ErrorCode::ConfigError, "unknown preset '" + c.preset + "'");
    CartanType type{family_from_char(c.family[0]), c.rank};
    ctx.datum = build_root_datum(type, preset);
  }
  ctx.table = positive_root_table(ctx.datum);
  ctx.weyl = enumerate_weyl(ctx.datum, ctx.table, c.caps.weyl);
  for (int i : c.J) {
    require(i >= 1 && i <= ctx.datum.n(), ErrorCode::ConfigError, "J index out of range");
    ctx.J0.push_back(i - 1);
  }
  std::sort(ctx.J0.begin(), ctx.J0.end());
  ctx.J0.erase(std::unique(ctx.J0.begin(), ctx.J0.end()), ctx.J0.end());
  ctx.levi = build_levi(ctx.datum, ctx.table, ctx.J0, c.f);
  if (c.lambda.empty()) {
    ctx.lambda = UnderlineWeight::zero(c.f, ctx.datum.d);
  } else {
    for (const Vec& v : c.lambda)
      require(static_cast<int>(v.size()) == ctx.datum.d, ErrorCode::ConfigError,
              "lambda vectors must have the lattice rank " + std::to_string(ctx.datum.d));
    ctx.lambda.comps = c.lambda;
  }
  return ctx;
}

inline int thread_budget() {
  const char* env = std::getenv("SATAKE_LAB_THREADS");
  if (!env) return static_cast<int>(std::thread::hardware_concurrency());
  long v = std::strtol(env, nullptr, 10);
  if (v <= 0) return static_cast<int>(std::thread::hardware_concurrency());
  return static_cast<int>(v);
}

struct RunResult {
  Json envelope;
  int exit_code = 0;
};

namespace detail {

inline Json run_check(const JobConfig& c, const JobContext& ctx, bool& assumption_failed) {
  Json out;
  CheckReport pb = check_p_bound(ctx.table, c.p);
  out["p_bound"] = to_json(pb);
  if (pb.verdict == Verdict::Fail) assumption_failed = true;

  PValuationTable pv = p_valuation_table(ctx.datum, ctx.table, ctx.J0, c.p);
  out["p_valuation"] = to_json(pv);
  if (pv.verdict == Verdict::Fail) assumption_failed = true;

  try {
    CheckReport orth = check_orthogonality_direct(ctx.datum, ctx.table, ctx.weyl, ctx.levi,
                                                  ctx.lambda, c.p, c.f, c.caps.underline);
    out["orthogonality_direct"] = to_json(orth);
    if (orth.verdict == Verdict::Fail) assumption_failed = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPSmall && e.code() != ErrorCode::NotDominant) throw;
    CheckReport r;
    r.name = "orthogonality-direct";
    r.verdict = Verdict::NotApplicable;
    r.notes["reason"] = e.what();
    out["orthogonality_direct"] = to_json(r);
  }

  auto run_criterion = [&](Criterion which, const char* key) {
    try {
      CheckReport r = check_sufficient_criterion(ctx.datum, ctx.table, ctx.J0, ctx.lambda, c.p,
                                                 c.f, which, c.mt_refined);
      out[key] = to_json(r);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::WrongMode || e.code() == ErrorCode::NotDominant) {
        CheckReport r;
        r.name = to_string(which);
        r.verdict = Verdict::NotApplicable;
        r.notes["reason"] = e.what();
        out[key] = to_json(r);
      } else {
        throw;
      }
    }
  };
  run_criterion(Criterion::MT, "criterion_MT");
  run_criterion(Criterion::TrivialWt, "criterion_trivial_weight");
  run_criterion(Criterion::Bruhat, "criterion_bruhat");
  run_criterion(Criterion::Abelian, "criterion_abelian");

  // the pinned central cocharacters backing h_M
  XiData xi = xi_and_hM(ctx.datum, ctx.table, ctx.J0);
  Json comps = Json::array();
  for (const XiComponent& xc : xi.per_component) {
    Json one{{"component", xc.component}, {"skipped", xc.skipped}};
    if (!xc.skipped) {
      one["xi"] = xc.xi;
      one["pairing_with_highest"] = xc.pairing_with_highest;
    }
    comps.push_back(one);
  }
  out["xi_data"] = Json{{"per_component", comps}, {"h_M", xi.h_M}};
  return out;
}

inline Json run_oracle_verify(const JobConfig& c, const JobContext& ctx, bool& assumption_failed) {
  Json out;
  if (ctx.lambda.is_zero()) {
    CEResult ce = ce_cohomology_trivial(ctx.datum, ctx.table, ctx.J0, c.p, c.f, c.caps.ce);
    out["oracle"] = to_json(ce);
    CohomologyReport ko = kostant_report(ctx.datum, ctx.table, ctx.weyl, ctx.levi, ctx.lambda,
                                         c.p, c.f, c.caps);
    out["kostant"] = to_json(ko);
    // compare per-degree weight multisets: expand each constituent by the
    // characteristic-zero weight multiplicities of its Levi module
    bool agree = true;
    std::map<int, std::map<UnderlineWeight, Int>> expanded;
    for (const auto& [deg, cs] : ko.degrees)
      for (const Constituent& cst : cs) {
        std::map<UnderlineWeight, Int> acc;
        acc[UnderlineWeight{{}}] = 1;
        for (int j = 0; j < c.f; ++j) {
          MultiplicityTable mt = freudenthal(ctx.datum, ctx.table, ctx.J0, cst.weight.comps[j],
                                             c.caps.freudenthal);
          std::map<UnderlineWeight, Int> next;
          for (const auto& [pref, mul] : acc)
            for (const auto& [wt, m2] : mt.mult) {
              UnderlineWeight ext = pref;
              ext.comps.push_back(wt);
              next[ext] += mul * m2;
            }
          acc = std::move(next);
        }
        for (const auto& [w, m] : acc) expanded[deg][w] += m;
      }
    CEResult ce2 = ce;
    std::map<int, std::map<UnderlineWeight, Int>> oracle_blocks;
    for (const auto& [deg, mp] : ce2.blocks) oracle_blocks[deg] = mp;
    agree = (expanded == oracle_blocks);
    out["agreement"] = to_json(CheckReport{
        "oracle-vs-kostant", agree ? Verdict::Pass : Verdict::Fail, {}, {}});
    if (!agree) assumption_failed = true;
  } else if (ctx.datum.label == "A1" && ctx.datum.preset == LatticePreset::SimplyConnected &&
             c.f == 1) {
    Int lam = ctx.lambda.comps[0][0];
    Sl2OracleResult sl2 = sl2_module_oracle(lam, c.p);
    out["oracle"] = Json{{"h0_weights", sl2.h0_weights}, {"h1_weights", sl2.h1_weights}};
    CohomologyReport ko = kostant_report(ctx.datum, ctx.table, ctx.weyl, ctx.levi, ctx.lambda,
                                         c.p, c.f, c.caps);
    out["kostant"] = to_json(ko);
    std::vector<Int> k0, k1;
    for (const Constituent& cst : ko.degrees.at(0)) k0.push_back(cst.weight.comps[0][0]);
    for (const Constituent& cst : ko.degrees.at(1)) k1.push_back(cst.weight.comps[0][0]);
    std::sort(k0.begin(), k0.end());
    std::sort(k1.begin(), k1.end());
    bool agree = (k0 == sl2.h0_weights) && (k1 == sl2.h1_weights);
    out["agreement"] = to_json(CheckReport{
        "oracle-vs-kostant", agree ? Verdict::Pass : Verdict::Fail, {}, {}});
    if (!agree) assumption_failed = true;
  } else {
    fail(ErrorCode::ConfigError,
         "oracle-verify supports lambda = 0, or A1 SimplyConnected with f = 1");
  }
  return out;
}

inline Json run_parameters(const JobConfig& c, const JobContext& ctx) {
  std::optional<std::vector<std::vector<int>>> restrict0;
  if (c.parameters_J) {
    std::vector<std::vector<int>> r0;
    for (const auto& J1 : *c.parameters_J) {
      std::vector<int> one;
      for (int i : J1) {
        require(i >= 1 && i <= ctx.datum.n(), ErrorCode::ConfigError,
                "parameters_J index out of range");
        one.push_back(i - 1);
      }
      r0.push_back(std::move(one));
    }
    restrict0 = std::move(r0);
  }
  std::vector<std::vector<int>> subsets;
  if (restrict0) {
    subsets = *restrict0;
  } else {
    int n = ctx.datum.n();
    require(n <= 20, ErrorCode::EnumerationCap, "restrict parameters_J for large ranks");
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> J;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) J.push_back(i);
      subsets.push_back(std::move(J));
    }
  }
  // per-J computations are independent; run them on the thread budget and
  // assemble in index order so the output is schedule-independent
  int budget = std::max(1, std::min<int>(thread_budget(), static_cast<int>(subsets.size())));
  std::vector<Json> results(subsets.size());
  auto work_one = [&](std::size_t s) {
    results[s] = to_json(parameter_support_for(ctx.datum, ctx.table, ctx.weyl, subsets[s],
                                               ctx.lambda, c.p, c.f, c.caps));
  };
  if (budget <= 1) {
    for (std::size_t s = 0; s < subsets.size(); ++s) work_one(s);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mu;
    for (int w = 0; w < budget; ++w)
      pool.emplace_back([&] {
        while (true) {
          std::size_t s = next.fetch_add(1);
          if (s >= subsets.size()) break;
          try {
            work_one(s);
          } catch (...) {
            std::lock_guard<std::mutex> lock(err_mu);
            if (!first_error) first_error = std::current_exception();
          }
        }
      });
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  Json arr = Json::array();
  for (Json& r : results) arr.push_back(std::move(r));
  return Json{{"by_levi", arr}};
}

}  // namespace detail

inline RunResult run(JobConfig c) {
  auto start = std::chrono::steady_clock::now();
  require(!c.command.empty(), ErrorCode::ConfigError, "no command given");
  bool known = false;
  for (const std::string& name : command_names()) known = known || name == c.command;
  require(known, ErrorCode::ConfigError, "unknown command '" + c.command + "'");

  JobContext ctx = make_context(c);
  bool assumption_failed = false;
  Json results;
  results["root_datum"] = to_json(ctx.datum);

  auto emit_cohomology = [&](const char* key, ReportKind kind) {
    CohomologyReport rep;
    switch (kind) {
      case ReportKind::LieAlgebra:
        rep = kostant_report(ctx.datum, ctx.table, ctx.weyl, ctx.levi, ctx.lambda, c.p, c.f, c.caps);
        break;
      case ReportKind::GroupSemisimplified:
        rep = group_cohomology_report(ctx.datum, ctx.table, ctx.weyl, ctx.levi, ctx.lambda, c.p,
                                      c.f, c.caps);
        break;
      case ReportKind::LeftAdjoint:
        rep = left_adjoint_report(ctx.datum, ctx.table, ctx.weyl, ctx.levi, ctx.lambda, c.p, c.f,
                                  c.caps);
        break;
    }
    results[key] = to_json(rep);
  };

  if (c.command == "check") {
    results["checks"] = detail::run_check(c, ctx, assumption_failed);
  } else if (c.command == "kostant") {
    emit_cohomology("kostant", ReportKind::LieAlgebra);
  } else if (c.command == "group-cohomology") {
    emit_cohomology("group_cohomology", ReportKind::GroupSemisimplified);
  } else if (c.command == "left-adjoint") {
    emit_cohomology("left_adjoint", ReportKind::LeftAdjoint);
  } else if (c.command == "satake") {
    SatakeTargetReport rep = satake_target_report(ctx.datum, ctx.table, ctx.weyl, ctx.levi,
                                                  ctx.lambda, c.p, c.f, c.caps);
    results["satake"] = to_json(rep);
    if (rep.orthogonality == Verdict::Fail) assumption_failed = true;
  } else if (c.command == "pseries") {
    require(c.chi0.has_value(), ErrorCode::ConfigError, "pseries requires field 'chi0'");
    ModPCharacter chi;
    chi.modulus = pf_minus_one(c.p, c.f);
    chi.basis_tag = "T";
    chi.exps = *c.chi0;
    for (Int& e : chi.exps) e = ((e % chi.modulus) + chi.modulus) % chi.modulus;
    PrincipalSeriesReport rep =
        principal_series_report(ctx.datum, ctx.table, ctx.weyl, chi, c.p, c.f, c.caps);
    results["pseries"] = to_json(rep);
  } else if (c.command == "parameters") {
    results["parameters"] = detail::run_parameters(c, ctx);
  } else if (c.command == "oracle-verify") {
    results["oracle_verify"] = detail::run_oracle_verify(c, ctx, assumption_failed);
  } else if (c.command == "report-all") {
    results["checks"] = detail::run_check(c, ctx, assumption_failed);
    bool pbound_ok = check_p_bound(ctx.table, c.p).verdict == Verdict::Pass;
    bool psmall_ok = false;
    try {
      psmall_ok = pbound_ok && is_p_small(ctx.datum, ctx.table, ctx.lambda, c.p).ok;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotDominant) throw;
    }
    if (pbound_ok && psmall_ok) {
      emit_cohomology("kostant", ReportKind::LieAlgebra);
      emit_cohomology("group_cohomology", ReportKind::GroupSemisimplified);
      emit_cohomology("left_adjoint", ReportKind::LeftAdjoint);
      SatakeTargetReport rep = satake_target_report(ctx.datum, ctx.table, ctx.weyl, ctx.levi,
                                                    ctx.lambda, c.p, c.f, c.caps);
      results["satake"] = to_json(rep);
      if (rep.orthogonality == Verdict::Fail) assumption_failed = true;
      results["parameters"] = detail::run_parameters(c, ctx);
      if (ctx.lambda.is_zero() && c.f * ctx.levi.dim_N_alg <= c.caps.ce)
        results["oracle_verify"] = detail::run_oracle_verify(c, ctx, assumption_failed);
    }
    if (c.chi0) {
      ModPCharacter chi;
      chi.modulus = pf_minus_one(c.p, c.f);
      chi.basis_tag = "T";
      chi.exps = *c.chi0;
      for (Int& e : chi.exps) e = ((e % chi.modulus) + chi.modulus) % chi.modulus;
      if (pbound_ok)
        results["pseries"] =
            to_json(principal_series_report(ctx.datum, ctx.table, ctx.weyl, chi, c.p, c.f, c.caps));
    }
  }

  auto stop = std::chrono::steady_clock::now();
  Json envelope;
  envelope["schema_version"] = 1;
  envelope["command"] = c.command;
  envelope["config"] = config_echo(c);
  envelope["results"] = results;
  Json verdicts = Json::object();
  if (results.contains("checks"))
    for (auto it = results["checks"].begin(); it != results["checks"].end(); ++it)
      if (it.value().contains("verdict")) verdicts[it.key()] = it.value()["verdict"];
  if (results.contains("satake")) verdicts["satake_orthogonality"] = results["satake"]["orthogonality"];
  if (results.contains("oracle_verify"))
    verdicts["oracle_agreement"] = results["oracle_verify"]["agreement"]["verdict"];
  envelope["verdicts"] = verdicts;
  envelope["timings"] = Json{
      {"total_ms",
       std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()}};
  return RunResult{envelope, assumption_failed ? 2 : 0};
}

// Deterministic plain-text rendering of an envelope.
inline void render_text(const Json& j, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        os << pad << it.key() << ":\n";
        render_text(it.value(), os, indent + 2);
      } else {
        os << pad << it.key() << ": " << it.value().dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    bool scalar = true;
    for (const Json& x : j) scalar = scalar && !(x.is_object() || x.is_array());
    if (scalar) {
      os << pad << j.dump() << "\n";
    } else {
      for (const Json& x : j) {
        os << pad << "-\n";
        render_text(x, os, indent + 2);
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace satake
