// Copyright 2026 The qsd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsd/bounds.hpp"
#include "qsd/compare.hpp"
#include "qsd/ensemble.hpp"
#include "qsd/errors.hpp"
#include "qsd/exact.hpp"
#include "qsd/random.hpp"
#include "qsd/serialization.hpp"
#include "qsd/spectral.hpp"
#include "qsd/tolerances.hpp"
#include "reference.hpp"

namespace {

using namespace qsd;

constexpr const char* kVersion = "0.1.0";

// Exit code contract (stable; scripts depend on it):
//   0 success / certificate passes
//   1 validation error (bad ensemble, bad flags, bad tolerances)
//   2 certification or self-check failure
//   3 I/O or parse error
//   4 unsupported instance (no exact solver for it)
enum ExitCode {
  kExitOk = 0,
  kExitValidation = 1,
  kExitCheckFailed = 2,
  kExitIo = 3,
  kExitUnsupported = 4,
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw ParseError("cannot read " + path);
  return std::move(buf).str();
}

// Default tolerances, overridable through QSD_TOLERANCES, e.g.
//   QSD_TOLERANCES="tol_psd=1e-9,tol_eig=1e-13"
Tolerances tolerances_from_env() {
  Tolerances t;
  const char* env = std::getenv("QSD_TOLERANCES");
  if (env == nullptr || *env == '\0') return t;
  std::string spec(env);
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string item =
        spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error("QSD_TOLERANCES: expected name=value, got '" + item + "'");
    }
    const std::string name = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    double value = 0.0;
    std::size_t used = 0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != text.size() || !(value > 0.0)) {
      throw Error("QSD_TOLERANCES: '" + text + "' is not a positive number");
    }
    if (name == "tol_eig") {
      t.tol_eig = value;
    } else if (name == "tol_psd") {
      t.tol_psd = value;
    } else if (name == "tol_orth") {
      t.tol_orth = value;
    } else if (name == "tol_recon") {
      t.tol_recon = value;
    } else if (name == "tol_rank") {
      t.tol_rank = value;
    } else {
      throw Error("QSD_TOLERANCES: unknown tolerance '" + name + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return t;
}

std::vector<double> parse_csv(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    double value = 0.0;
    std::size_t used = 0;
    try {
      value = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (tok.empty() || used != tok.size()) {
      throw Error(std::string(what) + ": '" + tok + "' is not a number");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// ---- shared rendering -----------------------------------------------------

void write_tolerances(JsonWriter& w, const Tolerances& t) {
  w.key("tolerances").begin_object();
  w.key("tol_eig").value(t.tol_eig);
  w.key("tol_psd").value(t.tol_psd);
  w.key("tol_orth").value(t.tol_orth);
  w.key("tol_recon").value(t.tol_recon);
  w.key("tol_rank").value(t.tol_rank);
  w.end_object();
}

void write_input(JsonWriter& w, const char* key, const std::string& path,
                 const std::string& digest) {
  w.key(key).begin_object();
  w.key("path").value(path);
  w.key("digest").value(digest);
  w.end_object();
}

void write_certificate(JsonWriter& w, const Certificate& cert) {
  w.key("certificate").begin_object();
  w.key("pass").value(cert.pass);
  w.key("hermiticity_defect").value(cert.hermiticity_defect);
  w.key("min_margin").value(cert.min_margin);
  w.key("margins").begin_array(true);
  for (double m : cert.margins) w.value(m);
  w.end_array();
  w.end_object();
}

void write_povm(JsonWriter& w, const char* key, const Povm& p) {
  w.key(key).begin_object();
  w.key("dim").value(p.dim());
  w.key("kind").value(p.kind == Povm::Kind::ambiguous ? "ambiguous"
                                                      : "unambiguous");
  w.key("elements").begin_array();
  for (const ComplexMatrix& e : p.elements) write_matrix(w, e);
  w.end_array();
  w.end_object();
}

std::string human_tolerances(const Tolerances& t) {
  std::string out = "tolerances: tol_eig=" + format_real(t.tol_eig);
  out += " tol_psd=" + format_real(t.tol_psd);
  out += " tol_orth=" + format_real(t.tol_orth);
  out += " tol_recon=" + format_real(t.tol_recon);
  out += " tol_rank=" + format_real(t.tol_rank);
  out += "\n";
  return out;
}

std::string human_header(const char* command) {
  std::string out = "command: ";
  out += command;
  out += "\nversion: ";
  out += kVersion;
  out += "\n";
  return out;
}

std::string human_certificate(const Certificate& cert) {
  std::string out;
  out += "hermiticity_defect = " + format_real(cert.hermiticity_defect) + "\n";
  out += "min_margin = " + format_real(cert.min_margin) + "\n";
  out += "margins =";
  for (double m : cert.margins) out += " " + format_real(m);
  out += "\n";
  out += std::string("certificate: ") + (cert.pass ? "pass" : "fail") + "\n";
  return out;
}

void emit(const std::string& text) { std::fputs(text.c_str(), stdout); }

const char* method_name(ExactMethod m) {
  switch (m) {
    case ExactMethod::two_state_helstrom: return "two_state_helstrom";
    case ExactMethod::commuting_classical: return "commuting_classical";
    case ExactMethod::structured_family: return "structured_family";
  }
  return "unknown";
}

// ---- subcommands ----------------------------------------------------------

int run_bounds(const std::string& path, bool json, const Tolerances& tol) {
  const std::string text = slurp(path);
  const std::string digest = fnv1a64_hex(text);
  const Ensemble e = parse_ensemble(text, tol);
  const BoundReport report = all_bounds(e, tol);
  const Ranking ranking = rank_bounds(report);

  if (json) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("bounds");
    w.key("version").value(kVersion);
    write_input(w, "input", path, digest);
    write_tolerances(w, tol);
    w.key("m").value(report.m);
    w.key("dim").value(report.dim);
    w.key("effective_dim").value(report.effective_dim);
    w.key("values").begin_object();
    for (std::size_t b = 0; b < kNumBounds; ++b) {
      w.key(kBoundNames[b]).value(report.values[b]);
    }
    w.end_object();
    w.key("clamped").begin_object();
    for (std::size_t b = 0; b < kNumBounds; ++b) {
      w.key(kBoundNames[b]).value(report.clamped[b]);
    }
    w.end_object();
    w.key("l4_per_k").begin_array(true);
    for (double v : report.l4_per_k) w.value(v);
    w.end_array();
    w.key("l4_min_index").value(report.l4_min_index);
    w.key("top_prior_mass").value(report.l0_top_prior_mass);
    if (report.helstrom) w.key("helstrom").value(*report.helstrom);
    w.key("ranking").value(ranking.formatted);
    w.end_object();
    emit(w.take());
    return kExitOk;
  }

  std::string out = human_header("bounds");
  out += "input: " + path + "\n";
  out += "digest: " + digest + "\n";
  out += human_tolerances(tol);
  out += "m = " + std::to_string(report.m) + "\n";
  out += "dim = " + std::to_string(report.dim) + "\n";
  out += "effective_dim = " + std::to_string(report.effective_dim) + "\n";
  for (std::size_t b = 0; b < kNumBounds; ++b) {
    out += std::string(kBoundNames[b]) + " = " +
           format_real(report.values[b]) + "\n";
  }
  out += "l4_per_k =";
  for (double v : report.l4_per_k) out += " " + format_real(v);
  out += "\n";
  out += "l4_min_index = " + std::to_string(report.l4_min_index) + "\n";
  out += "top_prior_mass = " + format_real(report.l0_top_prior_mass) + "\n";
  if (report.helstrom) {
    out += "helstrom = " + format_real(*report.helstrom) + "\n";
  }
  out += "ranking: " + ranking.formatted + "\n";
  emit(out);
  return kExitOk;
}

int run_exact(const std::string& path, bool json,
              const std::string& povm_out, const Tolerances& tol) {
  const std::string text = slurp(path);
  const std::string digest = fnv1a64_hex(text);
  const Ensemble e = parse_ensemble(text, tol);
  const ExactResult result =
      e.m() == 2 ? solve_two_state(e, tol) : solve_commuting(e, tol);

  if (!povm_out.empty()) save_povm(povm_out, result.optimal_povm);

  if (json) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("exact");
    w.key("version").value(kVersion);
    write_input(w, "input", path, digest);
    write_tolerances(w, tol);
    w.key("method").value(method_name(result.method));
    w.key("qe").value(result.qe);
    w.key("success").value(result.success);
    write_certificate(w, result.certificate);
    write_povm(w, "povm", result.optimal_povm);
    w.end_object();
    emit(w.take());
    return kExitOk;
  }

  std::string out = human_header("exact");
  out += "input: " + path + "\n";
  out += "digest: " + digest + "\n";
  out += human_tolerances(tol);
  out += std::string("method: ") + method_name(result.method) + "\n";
  out += "qe = " + format_real(result.qe) + "\n";
  out += "success = " + format_real(result.success) + "\n";
  out += human_certificate(result.certificate);
  if (!povm_out.empty()) out += "povm written to " + povm_out + "\n";
  emit(out);
  return kExitOk;
}

int run_certify(const std::string& ensemble_path, const std::string& povm_path,
                bool json, const Tolerances& tol) {
  const std::string ensemble_text = slurp(ensemble_path);
  const std::string povm_text = slurp(povm_path);
  const std::string ensemble_digest = fnv1a64_hex(ensemble_text);
  const std::string povm_digest = fnv1a64_hex(povm_text);
  const Ensemble e = parse_ensemble(ensemble_text, tol);
  const Povm povm = parse_povm(povm_text, tol);
  const Certificate cert = certify_optimal(e, povm, tol);

  if (json) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("certify");
    w.key("version").value(kVersion);
    write_input(w, "ensemble", ensemble_path, ensemble_digest);
    write_input(w, "povm", povm_path, povm_digest);
    write_tolerances(w, tol);
    write_certificate(w, cert);
    w.key("verdict").value(cert.pass ? "pass" : "fail");
    w.end_object();
    emit(w.take());
  } else {
    std::string out = human_header("certify");
    out += "ensemble: " + ensemble_path + "\n";
    out += "ensemble_digest: " + ensemble_digest + "\n";
    out += "povm: " + povm_path + "\n";
    out += "povm_digest: " + povm_digest + "\n";
    out += human_tolerances(tol);
    out += human_certificate(cert);
    emit(out);
  }
  return cert.pass ? kExitOk : kExitCheckFailed;
}

int run_attain(const std::string& path, bool json, const Tolerances& tol) {
  const std::string text = slurp(path);
  const std::string digest = fnv1a64_hex(text);
  const Ensemble e = parse_ensemble(text, tol);
  const AttainabilityReport report = check_l4_attainability(e, tol);

  if (json) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("attain");
    w.key("version").value(kVersion);
    write_input(w, "input", path, digest);
    write_tolerances(w, tol);
    w.key("l4").value(report.l4);
    w.key("l4_min_index").value(report.l4_min_index);
    w.key("per_k").begin_array();
    for (const AttainabilityPerK& pk : report.per_k) {
      w.begin_object();
      w.key("value").value(pk.value);
      w.key("attains_min").value(pk.attains_min);
      w.key("max_overlap").value(pk.max_overlap);
      w.key("orthogonal").value(pk.orthogonal);
      w.end_object();
    }
    w.end_array();
    w.key("attained").value(report.attained);
    if (report.attained_k) w.key("attained_k").value(*report.attained_k);
    if (report.qe) w.key("qe").value(*report.qe);
    if (report.certificate) write_certificate(w, *report.certificate);
    if (report.povm) write_povm(w, "povm", *report.povm);
    w.end_object();
    emit(w.take());
    return kExitOk;
  }

  std::string out = human_header("attain");
  out += "input: " + path + "\n";
  out += "digest: " + digest + "\n";
  out += human_tolerances(tol);
  out += "l4 = " + format_real(report.l4) + "\n";
  out += "l4_min_index = " + std::to_string(report.l4_min_index) + "\n";
  for (std::size_t k = 0; k < report.per_k.size(); ++k) {
    const AttainabilityPerK& pk = report.per_k[k];
    out += "per_k[" + std::to_string(k) + "]: value=" +
           format_real(pk.value) + " attains_min=" +
           (pk.attains_min ? "yes" : "no") + " max_overlap=" +
           format_real(pk.max_overlap) + " orthogonal=" +
           (pk.orthogonal ? "yes" : "no") + "\n";
  }
  out += std::string("attained: ") + (report.attained ? "yes" : "no");
  if (report.attained_k) out += " (k=" + std::to_string(*report.attained_k) +
                                ")";
  out += "\n";
  if (report.qe) out += "qe = " + format_real(*report.qe) + "\n";
  if (report.certificate) out += human_certificate(*report.certificate);
  emit(out);
  return kExitOk;
}

int run_structured(const std::string& alphas_text,
                   const std::string& priors_text, bool json,
                   std::optional<double> ratio_threshold,
                   const std::string& ambiguous_out,
                   const std::string& unambiguous_out, const Tolerances& tol) {
  const std::vector<double> alphas = parse_csv(alphas_text, "--alphas");
  std::vector<double> priors;
  if (priors_text == "uniform") {
    priors.assign(alphas.size(), 1.0 / static_cast<double>(alphas.size()));
  } else {
    priors = parse_csv(priors_text, "--priors");
  }
  const StructuredEnsemble s = validate_structured(priors, alphas, tol);
  const StructuredSolution sol = solve_structured(s, tol);

  if (!ambiguous_out.empty()) save_povm(ambiguous_out, sol.ambiguous_povm);
  if (!unambiguous_out.empty()) {
    save_povm(unambiguous_out, sol.unambiguous_povm);
  }

  const bool exceeds =
      ratio_threshold.has_value() &&
      (!sol.ratio_finite || sol.ratio > *ratio_threshold);

  if (json) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("structured");
    w.key("version").value(kVersion);
    write_tolerances(w, tol);
    w.key("priors").begin_array(true);
    for (double p : s.priors) w.value(p);
    w.end_array();
    w.key("alphas").begin_array(true);
    for (double a : s.alphas) w.value(a);
    w.end_array();
    w.key("qu").value(sol.qu);
    w.key("qe").value(sol.qe);
    // ratio is omitted when infinite (qe = 0 < qu); ratio_finite tells the
    // two apart.
    if (sol.ratio_finite) w.key("ratio").value(sol.ratio);
    w.key("ratio_finite").value(sol.ratio_finite);
    w.key("degenerate_ratio").value(sol.degenerate_ratio);
    w.key("twice_qe_holds").value(sol.twice_qe_holds);
    w.key("max_index").value(sol.max_index);
    w.key("unambiguous_failure").value(sol.unambiguous_failure);
    if (ratio_threshold) {
      w.key("ratio_threshold").value(*ratio_threshold);
      w.key("ratio_exceeds_threshold").value(exceeds);
    }
    write_certificate(w, sol.certificate);
    write_povm(w, "ambiguous_povm", sol.ambiguous_povm);
    write_povm(w, "unambiguous_povm", sol.unambiguous_povm);
    w.end_object();
    emit(w.take());
    return kExitOk;
  }

  std::string out = human_header("structured");
  out += human_tolerances(tol);
  out += "priors =";
  for (double p : s.priors) out += " " + format_real(p);
  out += "\nalphas =";
  for (double a : s.alphas) out += " " + format_real(a);
  out += "\n";
  out += "qu = " + format_real(sol.qu) + "\n";
  out += "qe = " + format_real(sol.qe) + "\n";
  out += std::string("ratio = ") +
         (sol.ratio_finite ? format_real(sol.ratio) : "infinite") + "\n";
  out += std::string("degenerate_ratio: ") +
         (sol.degenerate_ratio ? "true" : "false") + "\n";
  out += std::string("twice_qe_holds: ") +
         (sol.twice_qe_holds ? "true" : "false") + "\n";
  out += "max_index = " + std::to_string(sol.max_index) + "\n";
  out += "unambiguous_failure = " + format_real(sol.unambiguous_failure) +
         "\n";
  if (ratio_threshold) {
    out += "ratio_threshold = " + format_real(*ratio_threshold) + "\n";
    out += std::string("ratio_exceeds_threshold: ") +
           (exceeds ? "true" : "false") + "\n";
  }
  out += human_certificate(sol.certificate);
  if (!ambiguous_out.empty()) {
    out += "ambiguous povm written to " + ambiguous_out + "\n";
  }
  if (!unambiguous_out.empty()) {
    out += "unambiguous povm written to " + unambiguous_out + "\n";
  }
  emit(out);
  return kExitOk;
}

int run_compare(const SweepConfig& cfg, bool json) {
  const SweepSummary summary = run_sweep(cfg);

  if (json) {
    std::string doc = summary_to_json(summary);
    while (!doc.empty() && doc.back() == '\n') doc.pop_back();
    JsonWriter w;
    w.begin_object();
    w.key("command").value("compare");
    w.key("version").value(kVersion);
    w.key("summary").raw_value(doc);
    w.end_object();
    emit(w.take());
    return summary.all_checks_pass() ? kExitOk : kExitCheckFailed;
  }

  std::string out = human_header("compare");
  out += "config: seed=" + std::to_string(cfg.seed) +
         " trials=" + std::to_string(cfg.trials) +
         " m=" + std::to_string(cfg.m) + " dim=" + std::to_string(cfg.dim) +
         " kind=" +
         std::string(kEnsembleKindNames[static_cast<std::size_t>(cfg.kind)]) +
         " record_cap=" + std::to_string(cfg.record_cap) + "\n";
  out += human_tolerances(cfg.tol);
  out += "config_hash: " + summary.config_hash + "\n";
  out += "wins:";
  for (std::size_t b = 0; b < kNumBounds; ++b) {
    out += " " + std::string(kBoundNames[b]) + "=" +
           std::to_string(summary.wins[b]);
  }
  out += "\ntie_credits:";
  for (std::size_t b = 0; b < kNumBounds; ++b) {
    out += " " + std::string(kBoundNames[b]) + "=" +
           std::to_string(summary.tie_credits[b]);
  }
  out += "\n";
  out += "tied_trials = " + std::to_string(summary.tied_trials) + "\n";
  for (const CheckStat& c : summary.checks) {
    out += "check " + c.name + ": applied=" + std::to_string(c.applied) +
           " violations=" + std::to_string(c.violations);
    if (c.applied > 0) out += " worst_slack=" + format_real(c.worst_slack);
    out += "\n";
  }
  out += std::string("all_checks_pass: ") +
         (summary.all_checks_pass() ? "true" : "false") + "\n";
  for (const TrialRecord& r : summary.records) {
    out += "trial " + std::to_string(r.index) + ": values=";
    for (std::size_t b = 0; b < kNumBounds; ++b) {
      if (b > 0) out += ",";
      out += format_real(r.values[b]);
    }
    out += " winner=" + std::string(kBoundNames[r.winner]);
    out += std::string(" tied=") + (r.tied ? "yes" : "no");
    if (r.has_exact) out += " exact_qe=" + format_real(r.exact_qe);
    out += "\n";
  }
  emit(out);
  return summary.all_checks_pass() ? kExitOk : kExitCheckFailed;
}

int run_reference(bool json, const Tolerances& tol) {
  const std::vector<ref::Entry> entries = ref::evaluate_all(tol);
  const std::size_t failures = ref::count_failures(entries);

  if (json) {
    JsonWriter w;
    w.begin_object();
    w.key("command").value("reference");
    w.key("version").value(kVersion);
    write_tolerances(w, tol);
    w.key("entries").begin_array();
    for (const ref::Entry& e : entries) {
      w.begin_object();
      w.key("name").value(e.name);
      w.key("expected").value(e.expected);
      w.key("actual").value(e.actual);
      w.key("abs_error").value(e.abs_error);
      w.key("tolerance").value(e.tolerance);
      w.key("pass").value(e.pass);
      w.end_object();
    }
    w.end_array();
    w.key("failures").value(failures);
    w.end_object();
    emit(w.take());
  } else {
    std::string out = human_header("reference");
    out += human_tolerances(tol);
    for (const ref::Entry& e : entries) {
      out += std::string(e.pass ? "[PASS] " : "[FAIL] ") + e.name +
             " expected=" + e.expected + " actual=" + e.actual + "\n";
    }
    out += "failures: " + std::to_string(failures) + "\n";
    emit(out);
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-error discrimination bounds, exact solvers and "
               "optimality certificates"};
  app.set_version_flag("--version", std::string("qsd ") + kVersion);
  app.require_subcommand(1);

  std::string bounds_file;
  bool bounds_json = false;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "Evaluate the seven lower bounds for an ensemble file");
  bounds_cmd->add_option("file", bounds_file, "ensemble JSON file")
      ->required();
  bounds_cmd->add_flag("--json", bounds_json, "machine-readable output");

  std::string exact_file;
  std::string exact_povm_out;
  bool exact_json = false;
  CLI::App* exact_cmd = app.add_subcommand(
      "exact",
      "Exact minimum-error probability (two-state or commuting ensembles)");
  exact_cmd->add_option("file", exact_file, "ensemble JSON file")->required();
  exact_cmd->add_option("--povm-out", exact_povm_out,
                        "write the optimal POVM to this file");
  exact_cmd->add_flag("--json", exact_json, "machine-readable output");

  std::string certify_ensemble;
  std::string certify_povm;
  bool certify_json = false;
  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "Check a candidate POVM for optimality");
  certify_cmd->add_option("ensemble", certify_ensemble, "ensemble JSON file")
      ->required();
  certify_cmd->add_option("povm", certify_povm, "POVM JSON file")->required();
  certify_cmd->add_flag("--json", certify_json, "machine-readable output");

  std::string attain_file;
  bool attain_json = false;
  CLI::App* attain_cmd = app.add_subcommand(
      "attain",
      "Check whether the pivot bound L4 is attained (orthogonal supports)");
  attain_cmd->add_option("file", attain_file, "ensemble JSON file")
      ->required();
  attain_cmd->add_flag("--json", attain_json, "machine-readable output");

  std::string structured_alphas;
  std::string structured_priors = "uniform";
  std::string structured_ambiguous_out;
  std::string structured_unambiguous_out;
  double structured_threshold = 0.0;
  bool structured_json = false;
  CLI::App* structured_cmd = app.add_subcommand(
      "structured",
      "Closed-form solution of the shared-direction diagonal family");
  structured_cmd
      ->add_option("--alphas", structured_alphas,
                   "comma-separated overlap weights in [0,1]")
      ->required();
  structured_cmd->add_option(
      "--priors", structured_priors,
      "comma-separated priors, or 'uniform' (default)");
  CLI::Option* threshold_opt = structured_cmd->add_option(
      "--ratio-threshold", structured_threshold,
      "also report whether qu/qe exceeds this value");
  structured_cmd->add_option("--ambiguous-out", structured_ambiguous_out,
                             "write the minimum-error POVM to this file");
  structured_cmd->add_option("--unambiguous-out", structured_unambiguous_out,
                             "write the unambiguous POVM to this file");
  structured_cmd->add_flag("--json", structured_json,
                           "machine-readable output");

  SweepConfig sweep_cfg;
  std::string sweep_kind = "general";
  bool compare_json = false;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Randomized bound comparison and inequality self-test");
  compare_cmd->add_option("--seed", sweep_cfg.seed, "sweep seed");
  compare_cmd->add_option("--trials", sweep_cfg.trials, "number of trials");
  compare_cmd->add_option("--m", sweep_cfg.m, "states per ensemble");
  compare_cmd->add_option("--dim", sweep_cfg.dim, "Hilbert space dimension");
  compare_cmd->add_option(
      "--kind", sweep_kind,
      "ensemble kind: general, commuting, equiprobable, structured");
  compare_cmd->add_option("--records", sweep_cfg.record_cap,
                          "keep per-trial records for the first N trials");
  compare_cmd->add_flag("--json", compare_json, "machine-readable output");

  bool reference_json = false;
  CLI::App* reference_cmd = app.add_subcommand(
      "reference",
      "Re-derive the built-in reference cases and compare with closed forms");
  reference_cmd->add_flag("--json", reference_json,
                          "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitValidation;
  }

  try {
    const Tolerances tol = tolerances_from_env();
    if (bounds_cmd->parsed()) return run_bounds(bounds_file, bounds_json, tol);
    if (exact_cmd->parsed()) {
      return run_exact(exact_file, exact_json, exact_povm_out, tol);
    }
    if (certify_cmd->parsed()) {
      return run_certify(certify_ensemble, certify_povm, certify_json, tol);
    }
    if (attain_cmd->parsed()) return run_attain(attain_file, attain_json, tol);
    if (structured_cmd->parsed()) {
      std::optional<double> threshold;
      if (threshold_opt->count() > 0) threshold = structured_threshold;
      return run_structured(structured_alphas, structured_priors,
                            structured_json, threshold,
                            structured_ambiguous_out,
                            structured_unambiguous_out, tol);
    }
    if (compare_cmd->parsed()) {
      try {
        sweep_cfg.kind = parse_ensemble_kind(sweep_kind);
      } catch (const ParseError& e) {
        throw Error(e.what());  // bad flag value: validation, not file I/O
      }
      sweep_cfg.tol = tol;
      return run_compare(sweep_cfg, compare_json);
    }
    if (reference_cmd->parsed()) return run_reference(reference_json, tol);
    std::fprintf(stderr, "error: no subcommand\n");
    return kExitValidation;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const NotCommuting& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUnsupported;
  } catch (const CertificateFailed& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  } catch (const NotUnambiguous& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  } catch (const InternalInconsistency& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  }
}
