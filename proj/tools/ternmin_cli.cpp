// ternmin: construct weight-class ternary codes, compute their enumerators
// and verify minimality.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 budget refusal.

#include "ternmin/acceptance.hpp"
#include "ternmin/certificates.hpp"
#include "ternmin/code.hpp"
#include "ternmin/errors.hpp"
#include "ternmin/json_io.hpp"
#include "ternmin/kernels.hpp"
#include "ternmin/minimality.hpp"
#include "ternmin/weight_class.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ternmin;

enum Exit { kOk = 0, kVerification = 1, kInvalid = 2, kBudget = 3 };

struct RunConfig {
  std::string family;
  int m = 0;
  int k = 0;
  std::vector<int> subset;
  std::vector<int> values;  // class values for --family custom
  bool unchecked = false;
  std::string format = "table";
  std::string output;
  int jobs = 0;
  bool brute = false;
  std::optional<int> brute_max_m;

  // explicit flag, then TERNMIN_BRUTE_MAX_M, then the library default
  int brute_cap(int fallback) const {
    if (brute_max_m) return *brute_max_m;
    if (const char* env = std::getenv("TERNMIN_BRUTE_MAX_M")) {
      try {
        return std::stoi(env);
      } catch (const std::exception&) {
        throw InvalidInput("TERNMIN_BRUTE_MAX_M is not an integer: " + std::string(env));
      }
    }
    return fallback;
  }
  bool json() const { return format == "json"; }
};

WeightClassFunction build_function(const RunConfig& cfg) {
  const Family family = parse_family(cfg.family);
  if (family == Family::custom) {
    if (cfg.values.empty()) throw InvalidInput("--family custom needs --values c0,c1,...,cm");
    std::vector<F3> cls;
    for (int v : cfg.values) {
      if (v < 0 || v > 2) throw InvalidInput("class values must be 0, 1 or 2");
      cls.emplace_back(v);
    }
    return WeightClassFunction::custom(std::move(cls));
  }
  WeightSet subset(cfg.subset.begin(), cfg.subset.end());
  return WeightClassFunction::make(family, cfg.m, cfg.k, subset,
                                   cfg.unchecked ? RangeCheck::unchecked : RangeCheck::enforce);
}

// Writes to -o when given, stdout otherwise.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot open " + cfg.output + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + cfg.output + " failed");
}

std::string header_line(const WeightClassFunction& fn) {
  std::ostringstream out;
  out << "C_" << to_string(fn.family()) << " m=" << fn.m();
  if (fn.k()) out << " k=" << *fn.k();
  if (!fn.subset().empty()) {
    out << " S=";
    bool first = true;
    for (int s : fn.subset()) {
      out << (first ? "" : ",") << s;
      first = false;
    }
  }
  return out.str();
}

int cmd_params(const RunConfig& cfg) {
  const auto fn = build_function(cfg);
  const auto spec = parameters(fn);
  const auto ab = ab_report(weight_distribution_closed(fn));
  if (ab.w_min != spec.d || ab.w_max != spec.w_max) {
    throw ConsistencyError("parameter formulas disagree with the closed-form distribution");
  }
  if (cfg.json()) {
    Json j = to_json(fn);
    j["n"] = to_decimal(spec.n);
    j["dim"] = spec.dim;
    j["d"] = to_decimal(spec.d);
    j["w_min"] = to_decimal(ab.w_min);
    j["w_max"] = to_decimal(ab.w_max);
    j["violates_ab"] = ab.violates_ab;
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << header_line(fn) << "\n"
        << "[" << spec.n << ", " << spec.dim << ", " << spec.d << "]\n"
        << "w_min " << ab.w_min << "\n"
        << "w_max " << ab.w_max << "\n"
        << "AB " << (ab.violates_ab ? "violated" : "satisfied") << " (3*w_min " << (ab.violates_ab ? "<=" : ">")
        << " 2*w_max)\n";
    emit(cfg, out.str());
  }
  return kOk;
}

int cmd_wdist(const RunConfig& cfg) {
  const auto fn = build_function(cfg);
  const auto closed = weight_distribution_closed(fn);
  if (cfg.brute) {
    const auto brute = weight_distribution_brute(fn.table(), BruteBudget{cfg.brute_cap(BruteBudget{}.max_m)});
    if (brute != closed) {
      std::cerr << "closed-form and brute-force weight distributions differ\n";
      return kVerification;
    }
  }
  if (cfg.json()) {
    auto j = to_json(WeightDistributionDoc{FunctionHeader::of(fn), closed});
    if (cfg.brute) j["brute_checked"] = true;
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << header_line(fn) << (cfg.brute ? "  (brute force agrees)" : "") << "\n";
    out << "w\tA_w\n";
    for (const auto& [w, a] : closed.entries) out << w << "\t" << a << "\n";
    emit(cfg, out.str());
  }
  return kOk;
}

int cmd_cwe(const RunConfig& cfg) {
  const auto fn = build_function(cfg);
  const auto closed = cwe_closed(fn);
  if (cfg.brute) {
    const auto brute = cwe_brute(fn.table(), BruteBudget{cfg.brute_cap(BruteBudget{}.max_m)});
    if (brute != closed) {
      std::cerr << "closed-form and brute-force complete weight enumerators differ\n";
      return kVerification;
    }
  }
  if (cfg.json()) {
    auto j = to_json(CweDoc{FunctionHeader::of(fn), closed});
    if (cfg.brute) j["brute_checked"] = true;
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << header_line(fn) << (cfg.brute ? "  (brute force agrees)" : "") << "\n";
    out << "t0\tt1\tt2\tmult\n";
    for (const auto& [c, mult] : closed.terms) {
      out << c.t0 << "\t" << c.t1 << "\t" << c.t2 << "\t" << mult << "\n";
    }
    emit(cfg, out.str());
  }
  return kOk;
}

std::string describe(const MinimalityVerdict& v) {
  std::ostringstream out;
  out << (v.minimal ? "minimal" : "NOT minimal");
  if (v.witness) {
    const auto& [a, b] = *v.witness;
    out << " (codeword (" << a.u << "," << a.v << ") covers (" << b.u << "," << b.v << "))";
  }
  if (v.spectral_witness) {
    const auto& w = *v.spectral_witness;
    out << " (triple " << w[0] << "," << w[1] << "," << w[2] << ")";
  }
  if (v.vacuous) out << " [vacuous]";
  return out.str();
}

int cmd_minimality(const RunConfig& cfg) {
  const auto fn = build_function(cfg);
  const auto ab = ab_report(weight_distribution_closed(fn));
  const auto spectral = is_minimal_spectral(fn);
  std::optional<MinimalityVerdict> brute;
  if (cfg.brute) brute = is_minimal_brute(fn.table(), cfg.brute_cap(kDefaultMinimalBruteMaxM));
  const bool agree = !brute || brute->minimal == spectral.minimal;

  if (cfg.json()) {
    Json j = to_json(fn);
    j["spectral"] = to_json(VerdictDoc{spectral, ab});
    j["brute"] = brute ? to_json(VerdictDoc{*brute, ab}) : Json(nullptr);
    j["agree"] = agree;
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << header_line(fn) << "\n"
        << "spectral: " << describe(spectral) << "\n"
        << "brute:    " << (brute ? describe(*brute) : std::string("not run (pass --brute)")) << "\n"
        << "w_min/w_max " << ab.w_min << "/" << ab.w_max << ", AB " << (ab.violates_ab ? "violated" : "satisfied")
        << "\n";
    emit(cfg, out.str());
  }
  if (!agree) {
    std::cerr << "engine error: spectral and brute-force minimality verdicts disagree\n";
    return kVerification;
  }
  return kOk;
}

int cmd_verify_paper(const RunConfig& cfg) {
  AcceptanceConfig config;
  config.brute_max_m = cfg.brute_cap(config.brute_max_m);
  config.minimal_brute_max_m = std::min(config.minimal_brute_max_m, config.brute_max_m);
  const auto results = run_acceptance(config);
  int failed = 0;
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << "\n       " << r.detail << "\n";
    failed += r.passed ? 0 : 1;
  }
  out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " passed\n";
  emit(cfg, out.str());
  return failed == 0 ? kOk : kVerification;
}

int cmd_export_gen(const RunConfig& cfg) {
  const auto fn = build_function(cfg);
  // n * (m+1) symbols held in memory
  require_budget(fn.m(), 16, "generator matrix export");
  const auto g = generator_matrix(fn.table());
  std::ostringstream out;
  write_generator_matrix(out, fn, g);
  emit(cfg, out.str());
  return kOk;
}

int cmd_inequalities(const RunConfig& cfg, int m_max, const std::string& lemma) {
  std::vector<LemmaTag> tags = {LemmaTag::binom_growth, LemmaTag::gap_positive, LemmaTag::tail_dominance};
  if (!lemma.empty()) tags = {parse_lemma_tag(lemma)};
  std::vector<CertificateReport> reports;
  for (auto tag : tags) {
    if (m_max < stated_min_m(tag)) {
      if (lemma.empty()) continue;  // range not reached yet
      throw InvalidInput("--m-max " + std::to_string(m_max) + " is below the range of " +
                         std::string(to_string(tag)) + " (m >= " + std::to_string(stated_min_m(tag)) + ")");
    }
    reports.push_back(sweep(m_max, tag));
  }
  bool all_pass = true;
  if (cfg.json()) {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& r : reports) {
      out << to_string(r.tag) << ": m in [" << r.m_min << ", " << r.m_max << "], " << r.margins.size()
          << " points, " << r.failures.size() << " failures";
      if (r.min_slack) out << ", min slack " << *r.min_slack;
      out << "\n";
      for (const auto& [at, slack] : r.margins) {
        out << "  m=" << at.first;
        if (r.tag == LemmaTag::gap_positive) out << " k=" << at.second;
        out << "\t" << slack << "\n";
      }
    }
    emit(cfg, out.str());
  }
  for (const auto& r : reports) all_pass = all_pass && r.passed();
  return all_pass ? kOk : kVerification;
}

int cmd_scan(const RunConfig& cfg, int m_min, int m_max, const std::vector<std::string>& families) {
  if (m_min < 5 || m_max < m_min) throw InvalidInput("scan needs 5 <= --m-min <= --m-max");
  if (m_max > 60) throw InvalidInput("scan --m-max is capped at 60");
  std::ostringstream out;
  out << "family,m,k,n,dim,d,w_min,w_max,violates_ab,minimal_spectral\n";
  for (const auto& name : families) {
    const Family family = parse_family(name);
    if (family == Family::custom) throw InvalidInput("scan covers the families g, gbar and f");
    for (int m = m_min; m <= m_max; ++m) {
      for (int k = 2; k <= (m - 1) / 2; ++k) {
        WeightSet subset;
        if (family == Family::f) {
          subset = cfg.subset.empty() ? WeightSet{1} : WeightSet(cfg.subset.begin(), cfg.subset.end());
          if (*subset.rbegin() > k) continue;
        }
        const auto fn = WeightClassFunction::make(family, m, k, subset);
        const auto spec = parameters(fn);
        const auto ab = ab_report(weight_distribution_closed(fn));
        const auto verdict = is_minimal_spectral(fn);
        out << name << "," << m << "," << k << "," << spec.n << "," << spec.dim << "," << spec.d << "," << ab.w_min
            << "," << ab.w_max << "," << (ab.violates_ab ? "true" : "false") << ","
            << (verdict.minimal ? "true" : "false") << "\n";
      }
    }
  }
  emit(cfg, out.str());
  return kOk;
}

void add_function_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "g, gbar, f or custom")->required();
  sub->add_option("-m", cfg.m, "number of variables");
  sub->add_option("-k", cfg.k, "weight threshold");
  sub->add_option("-S", cfg.subset, "weight classes sent to 2 (family f), comma separated")->delimiter(',');
  sub->add_option("--values", cfg.values, "class values c0..cm (family custom), comma separated")->delimiter(',');
  sub->add_flag("--unchecked", cfg.unchecked, "skip the theorem range check on (m, k)");
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
  sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
}

void add_brute_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("--brute", cfg.brute, "recompute by exhaustive enumeration and compare");
  sub->add_option("--brute-max-m", cfg.brute_max_m, "largest m for exhaustive paths (env TERNMIN_BRUTE_MAX_M)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal ternary codes from weight-class functions"};
  app.set_config("--config", "", "TOML/INI file mirroring the command-line flags");
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--jobs", cfg.jobs, "worker threads for the enumeration kernels");

  auto* params = app.add_subcommand("params", "code parameters [n, dim, d], w_min, w_max and the AB verdict");
  add_function_options(params, cfg);
  add_output_options(params, cfg);

  auto* wdist = app.add_subcommand("wdist", "weight distribution");
  add_function_options(wdist, cfg);
  add_output_options(wdist, cfg);
  add_brute_options(wdist, cfg);

  auto* cwe = app.add_subcommand("cwe", "complete weight enumerator");
  add_function_options(cwe, cfg);
  add_output_options(cwe, cfg);
  add_brute_options(cwe, cfg);

  auto* minimality = app.add_subcommand("minimality", "spectral (and optionally brute-force) minimality check");
  add_function_options(minimality, cfg);
  add_output_options(minimality, cfg);
  add_brute_options(minimality, cfg);

  auto* verify = app.add_subcommand("verify-paper", "run the full acceptance battery");
  verify->add_option("--brute-max-m", cfg.brute_max_m, "largest m for exhaustive paths (env TERNMIN_BRUTE_MAX_M)");
  verify->add_option("-o,--output", cfg.output, "write the ledger to this file");

  auto* export_gen = app.add_subcommand("export-gen", "write the generator matrix as text");
  add_function_options(export_gen, cfg);
  export_gen->add_option("-o,--output", cfg.output, "output file (stdout if omitted)");

  int m_max = 50;
  std::string lemma;
  auto* inequalities = app.add_subcommand("inequalities", "exact certificate sweeps of the auxiliary inequalities");
  inequalities->add_option("--m-max", m_max, "largest m to check (<= 200)")->check(CLI::Range(2, 200));
  inequalities->add_option("--lemma", lemma, "binom_growth, gap_positive or tail_dominance (default: all)");
  add_output_options(inequalities, cfg);

  int scan_m_min = 5;
  int scan_m_max = 12;
  std::vector<std::string> scan_families = {"g", "gbar", "f"};
  auto* scan = app.add_subcommand("scan", "CSV of parameters and verdicts over (family, m, k)");
  scan->add_option("--m-min", scan_m_min, "smallest m");
  scan->add_option("--m-max", scan_m_max, "largest m");
  scan->add_option("--family", scan_families, "families to include, comma separated")->delimiter(',');
  scan->add_option("-S", cfg.subset, "S for family f (default 1)")->delimiter(',');
  scan->add_option("-o,--output", cfg.output, "write the CSV to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (cfg.jobs < 0) throw InvalidInput("--jobs must be positive");
    set_worker_count(cfg.jobs);
    if (params->parsed()) return cmd_params(cfg);
    if (wdist->parsed()) return cmd_wdist(cfg);
    if (cwe->parsed()) return cmd_cwe(cfg);
    if (minimality->parsed()) return cmd_minimality(cfg);
    if (verify->parsed()) return cmd_verify_paper(cfg);
    if (export_gen->parsed()) return cmd_export_gen(cfg);
    if (inequalities->parsed()) return cmd_inequalities(cfg, m_max, lemma);
    if (scan->parsed()) return cmd_scan(cfg, scan_m_min, scan_m_max, scan_families);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kBudget;
  } catch (const ConsistencyError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerification;
  }
  return kOk;
}
