// Copyright 2026 The QIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qic: verification campaigns, operator export, Jones evaluation, braid
// simulation and subspace-dimension reports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 resource-guard refusal.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qic/qic.hpp"

namespace fs = std::filesystem;
using qic::json;

namespace {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kGuard = 3 };

struct Options {
  std::string format = "json";
  bool force = false;
  double tol = qic::kDefaultTolerance;
  std::uint64_t seed = 7;
};

// Guards lifted by --force.
int basis_guard(const Options& o) { return o.force ? 40 : qic::kDefaultMaxQubits; }
int embed_guard(const Options& o) { return o.force ? qic::kDefaultMaxQubits : qic::kEmbeddedMaxQubits; }

json run_config(const std::string& command, const Options& o, int n, json extra = json::object()) {
  json cfg = {{"command", command},
              {"N", n},
              {"tolerance", o.tol},
              {"seed", o.seed},
              {"output_format", o.format},
              {"force", o.force}};
  for (auto& [k, v] : extra.items()) cfg[k] = v;
  return cfg;
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string fmt(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

std::string fmt(std::complex<double> z, int precision = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << z.real() << (z.imag() < 0 ? " - " : " + ")
    << std::abs(z.imag()) << "i";
  return s.str();
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o, int n_min, int n_max, bool local_only) {
  if (n_min > n_max) throw CLI::ValidationError("--n-min", "must not exceed --n-max");
  if (n_min < 2) throw CLI::ValidationError("--n-min", "must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  bool all_passed = true;
  json runs = json::array();
  for (int n = n_min; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    json run = {{"N", n}, {"reports", json::array()}, {"skipped", json::array()}};
    auto add = [&](const std::string& suite, const qic::VerificationReport& r) {
      json j = qic::to_json(r);
      j["suite"] = suite;
      all_passed = all_passed && r.passed();
      run["reports"].push_back(std::move(j));
    };
    auto guarded = [&](const std::string& suite, auto&& fn) {
      try {
        add(suite, fn());
      } catch (const qic::ResourceGuardError& e) {
        run["skipped"].push_back({{"suite", suite}, {"reason", e.what()}});
      }
    };
    if (!local_only) {
      guarded("tl", [&] {
        if (n > embed_guard(o)) throw qic::ResourceGuardError("abstract operators above the embedded guard");
        return qic::verify_tl(n, o.tol);
      });
      guarded("embedded_tl", [&] { return qic::verify_embedded_tl(n, o.tol, embed_guard(o)); });
      guarded("braid", [&] { return qic::verify_braid_relations(n, o.tol, embed_guard(o)); });
      guarded("local_global", [&] { return qic::verify_local_global_equivalence(n, o.tol, embed_guard(o)); });
    }
    guarded("local_algebra", [&] { return qic::verify_local_algebra(n, o.tol, o.seed, basis_guard(o)); });
    run["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    runs.push_back(std::move(run));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "pretty") {
    for (const auto& run : runs) {
      std::cout << "N=" << run["N"].get<int>() << "  (" << fmt(run["seconds"].get<double>(), 3) << " s)\n";
      for (const auto& rep : run["reports"]) {
        for (const auto& c : rep["checks"]) {
          std::cout << "  " << (c["pass"].get<bool>() ? "ok  " : "FAIL") << ' ' << rep["suite"].get<std::string>()
                    << '/' << c["name"].get<std::string>() << "  max_err=" << fmt(c["max_abs_error"].get<double>(), 3)
                    << "  n=" << c["instances"].get<std::size_t>() << '\n';
        }
      }
      for (const auto& s : run["skipped"]) {
        std::cout << "  skip " << s["suite"].get<std::string>() << ": " << s["reason"].get<std::string>() << '\n';
      }
    }
    std::cout << (all_passed ? "all checks passed" : "verification FAILED") << " in " << fmt(seconds, 3)
              << " s\n";
  } else {
    emit_json({{"config", run_config("verify", o, n_max,
                                     {{"N_min", n_min}, {"N_max", n_max}, {"local_only", local_only}})},
               {"passed", all_passed},
               {"seconds", seconds},
               {"runs", std::move(runs)}});
  }
  return all_passed ? kOk : kVerificationFailed;
}

// ------------------------------------------------------------------ dims

int cmd_dims(const Options& o, int n_max, const std::string& forbidden_text) {
  if (n_max < 1) throw CLI::ValidationError("--n-max", "must be at least 1");
  const auto words = qic::parse_forbidden_words(forbidden_text);
  const qic::ForbiddenWordAutomaton automaton(words);
  const auto counts = automaton.counts(n_max);
  std::optional<double> rate;
  if (n_max >= 10) rate = qic::growth_rate_estimate(words, n_max);

  if (o.format == "pretty" || o.format == "csv") {
    if (o.format == "csv") {
      std::cout << "N,dimension\n";
      for (int n = 1; n <= n_max; ++n) std::cout << n << ',' << counts[static_cast<std::size_t>(n - 1)] << '\n';
    } else {
      std::cout << "forbidden: " << forbidden_text << "\n   N  dimension\n";
      for (int n = 1; n <= n_max; ++n) {
        std::cout << std::setw(4) << n << "  " << counts[static_cast<std::size_t>(n - 1)] << '\n';
      }
      if (rate) std::cout << "growth rate ~ " << fmt(*rate, 10) << '\n';
    }
    return kOk;
  }
  json rows = json::array();
  for (int n = 1; n <= n_max; ++n) rows.push_back({{"N", n}, {"dimension", counts[static_cast<std::size_t>(n - 1)]}});
  emit_json({{"config", run_config("dims", o, n_max, {{"forbidden", words}})},
             {"rows", std::move(rows)},
             {"growth_rate", rate ? json(*rate) : json(nullptr)}});
  return kOk;
}

// ----------------------------------------------------------------- jones

int cmd_jones(const Options& o, const std::string& word_text, const std::string& file, int strands,
              const std::string& convention_text, int shots) {
  const auto convention = qic::parse_convention(convention_text);
  std::vector<qic::BraidWord> words;
  if (!file.empty()) {
    words = qic::read_braid_file(file);
  } else if (!word_text.empty()) {
    words.push_back(qic::parse_braid_word(word_text, strands));
  } else {
    throw CLI::ValidationError("jones", "either --word or --file is required");
  }

  json results = json::array();
  for (const auto& w : words) {
    if (w.strands > basis_guard(o)) {
      throw qic::ResourceGuardError("braid on " + std::to_string(w.strands) + " strands exceeds the N guard");
    }
    const auto r = shots > 0 ? qic::jones_shot_estimate(w, convention, shots, o.seed) : qic::jones_exact(w, convention);
    json j = qic::to_json(r);
    j["letters"] = w.letters;
    j["strands"] = w.strands;
    if (shots > 0) j["exact"] = qic::to_json(qic::jones_exact(w, convention))["value"];
    results.push_back(std::move(j));
  }

  if (o.format == "pretty") {
    for (const auto& j : results) {
      const std::complex<double> v(j["value"][0].get<double>(), j["value"][1].get<double>());
      std::cout << "strands=" << j["strands"].get<int>() << " writhe=" << j["writhe"].get<int>() << " ["
                << j["method"].get<std::string>() << "]  V = " << fmt(v);
      if (!j["std_error"].is_null() && j["method"] == "shots") {
        std::cout << "  +/- " << fmt(j["std_error"].get<double>(), 3);
      }
      std::cout << '\n';
    }
    return kOk;
  }
  emit_json({{"config", run_config("jones", o, words.front().strands,
                                   {{"convention", qic::to_string(convention)},
                                    {"shots_per_state", shots},
                                    {"paths", {{"input", file}}}})},
             {"results", std::move(results)}});
  return kOk;
}

// -------------------------------------------------------------- simulate

void check_register(const std::string& init, const Options& o) {
  if (init.empty() || init.find_first_not_of("01") != std::string::npos) {
    throw qic::ParseError("--init must be a bitstring");
  }
  if (static_cast<int>(init.size()) > basis_guard(o)) {
    throw qic::ResourceGuardError("register of " + std::to_string(init.size()) + " qubits exceeds the guard");
  }
}

json distribution_json(const qic::Distribution& d) {
  json j = json::object();
  for (const auto& [k, v] : d) j[k] = v;
  return j;
}

int cmd_simulate(const Options& o, const std::string& init, const std::string& word_text,
                 const std::string& window_text, std::uint64_t shots, double p, int trajectories, bool post,
                 std::optional<double> fit_target, const std::string& fit_outcome) {
  check_register(init, o);
  const auto mode = qic::parse_window_mode(window_text);
  const auto steps = qic::parse_gate_sequence(word_text);
  if (shots < 1) throw CLI::ValidationError("--shots", "must be at least 1");

  const qic::Statevector ideal = qic::ideal_final_state(init, steps, mode);
  const qic::CountsTable counts = p > 0.0 ? qic::run_noisy_braid(init, steps, mode, {p, o.seed}, trajectories, shots)
                                          : qic::sample_counts(ideal, shots, o.seed);
  const qic::Distribution ideal_dist = qic::to_distribution(ideal);
  std::optional<qic::PostSelection> selected;
  if (post) selected = qic::post_select(counts);
  std::optional<qic::DepolarizingFit> fit;
  if (fit_target) {
    fit = qic::fit_depolarizing_p(init, steps, mode, fit_outcome.empty() ? init : fit_outcome, *fit_target,
                                  trajectories, o.seed);
  }

  if (o.format == "csv") {
    std::cout << qic::to_csv(selected ? selected->counts : counts);
    return kOk;
  }
  const double leak = qic::leakage_fraction(counts);
  const double tv_raw = qic::total_variation_distance(qic::to_distribution(counts), ideal_dist);
  if (o.format == "pretty") {
    std::cout << "ideal:\n";
    for (const auto& [k, v] : ideal_dist) std::cout << "  " << k << "  " << fmt(v) << '\n';
    std::cout << "sampled (" << counts.shots << " shots, p=" << p << "):\n";
    for (const auto& [k, c] : counts.counts) std::cout << "  " << k << "  " << c << '\n';
    std::cout << "leakage " << fmt(leak) << ", TV to ideal " << fmt(tv_raw) << '\n';
    if (selected) {
      std::cout << "post-selected: retained " << fmt(selected->retained_fraction) << ", TV to ideal "
                << fmt(qic::total_variation_distance(qic::to_distribution(selected->counts), ideal_dist)) << '\n';
    }
    if (fit) std::cout << "fitted p = " << fmt(fit->p) << " (achieved " << fmt(fit->achieved) << ")\n";
    return kOk;
  }

  json out = {{"config", run_config("simulate", o, static_cast<int>(init.size()),
                                    {{"init", init},
                                     {"word", word_text},
                                     {"window", qic::to_string(mode)},
                                     {"shots", shots},
                                     {"noise_p", p},
                                     {"trajectories", trajectories},
                                     {"post_select", post}})},
              {"ideal", distribution_json(ideal_dist)},
              {"counts", qic::to_json(counts)},
              {"leakage_fraction", leak},
              {"tv_distance", tv_raw}};
  if (selected) {
    out["post_selected"] = {
        {"counts", qic::to_json(selected->counts)},
        {"retained_fraction", selected->retained_fraction},
        {"tv_distance", qic::total_variation_distance(qic::to_distribution(selected->counts), ideal_dist)}};
  }
  if (fit) out["fit"] = {{"p", fit->p}, {"achieved", fit->achieved}, {"target", *fit_target}};
  emit_json(out);
  return kOk;
}

// ------------------------------------------------------------------ leak

int cmd_leak(const Options& o, const std::string& init, int rounds, double p, int trajectories, std::uint64_t shots) {
  check_register(init, o);
  const auto counts = qic::run_idle_channel(init, rounds, {p, o.seed}, trajectories, shots);
  const double leak = qic::leakage_fraction(counts);
  if (o.format == "pretty") {
    std::cout << "idle rounds " << rounds << ", p=" << p << ": leakage " << fmt(leak) << '\n';
    return kOk;
  }
  if (o.format == "csv") {
    std::cout << qic::to_csv(counts);
    return kOk;
  }
  emit_json({{"config", run_config("leak", o, static_cast<int>(init.size()),
                                   {{"init", init}, {"rounds", rounds}, {"noise_p", p}, {"trajectories", trajectories},
                                    {"shots", shots}})},
             {"counts", qic::to_json(counts)},
             {"leakage_fraction", leak}});
  return kOk;
}

// ---------------------------------------------------------------- export

int cmd_export(const Options& o, int n, const std::string& what, std::string out_dir) {
  static const std::vector<std::string> kObjects{"basis", "V", "P", "B", "Pprime", "Bprime", "bgate",
                                                 "hamiltonian", "all"};
  if (std::find(kObjects.begin(), kObjects.end(), what) == kObjects.end()) {
    throw CLI::ValidationError("--what", "unknown object '" + what + "'");
  }
  if (out_dir.empty()) {
    const char* env = std::getenv("QIC_OUTPUT_DIR");
    out_dir = env ? env : ".";
  }
  auto wants = [&](const char* tag) { return what == "all" || what == tag; };
  const bool needs_operators = wants("P") || wants("B") || wants("Pprime") || wants("Bprime");
  if (needs_operators && n > embed_guard(o)) {
    throw qic::ResourceGuardError("operator export at N=" + std::to_string(n) + " exceeds the limit " +
                                  std::to_string(embed_guard(o)) + " (use --force)");
  }
  if (needs_operators && n < 2) throw CLI::ValidationError("--n", "operators need N >= 2");

  fs::create_directories(out_dir);
  json written = json::array();
  auto write = [&](const std::string& name, const json& j) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream(path) << j.dump(o.format == "pretty" ? 2 : -1) << '\n';
    written.push_back(path.string());
  };
  const std::string suffix = "_N" + std::to_string(n);

  std::optional<qic::QicBasis> basis;
  if (wants("basis") || wants("V") || needs_operators || wants("hamiltonian")) {
    basis = qic::enumerate_basis(n, basis_guard(o));
  }
  if (wants("basis")) write("basis" + suffix + ".json", qic::to_json(*basis));
  std::optional<qic::Isometry> v;
  if (wants("V") || wants("Pprime") || wants("Bprime")) v = qic::build_isometry(*basis);
  if (wants("V")) write("V" + suffix + ".json", qic::to_json(*v));
  for (int g = 0; needs_operators && g <= n - 2; ++g) {
    const std::string idx = std::to_string(g);
    const auto p = qic::build_abstract_projector(*basis, g);
    const auto b = qic::build_abstract_braid(*basis, g, +1);
    if (wants("P")) write("P" + idx + suffix + ".json", qic::to_json(p));
    if (wants("B")) write("B" + idx + suffix + ".json", qic::to_json(b));
    if (wants("Pprime")) write("Pprime" + idx + suffix + ".json", qic::to_json(qic::embed_operator(*v, p)));
    if (wants("Bprime")) write("Bprime" + idx + suffix + ".json", qic::to_json(qic::embed_operator(*v, b)));
  }
  if (wants("bgate")) {
    json j = qic::dense_matrix_json(qic::b_gate().matrix);
    j["sign"] = 1;
    write("bgate.json", j);
  }
  if (wants("hamiltonian")) {
    if (n < 2) throw CLI::ValidationError("--n", "the Pauli map needs N >= 2");
    write("hamiltonian" + suffix + ".json", qic::to_json(qic::pauli_decomposition(n)));
  }

  if (o.format == "pretty") {
    for (const auto& f : written) std::cout << f.get<std::string>() << '\n';
  } else {
    emit_json({{"config", run_config("export", o, n, {{"what", what}, {"paths", {{"output", out_dir}}}})},
               {"files", std::move(written)}});
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qubit-encoded Fibonacci anyon braiding toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty", "csv"}))
      ->capture_default_str();
  app.add_flag("--force", o.force, "Lift the N resource guards (memory grows as 2^N)");
  app.add_option("--tol", o.tol, "Verification tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  // Subcommand flags may also carry the shared options.
  auto shared = [&](CLI::App* sub) {
    sub->add_option("--format", o.format)->check(CLI::IsMember({"json", "pretty", "csv"}));
    sub->add_flag("--force", o.force);
    sub->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed);
  };

  int n_min = 3, n_max = 10;
  bool local_only = false;
  auto* verify = app.add_subcommand("verify", "Algebraic verification campaign");
  verify->add_option("--n-min", n_min)->capture_default_str();
  verify->add_option("--n-max", n_max)->capture_default_str();
  verify->add_flag("--local-only", local_only, "Only the local-gate checks");
  shared(verify);

  int dims_max = 20;
  std::string forbidden = "00";
  auto* dims = app.add_subcommand("dims", "Constrained subspace dimensions and growth rate");
  dims->add_option("--n-max", dims_max)->capture_default_str();
  dims->add_option("--forbidden", forbidden, "Comma separated forbidden words")->capture_default_str();
  shared(dims);

  std::string word, file, convention = "kl";
  int strands = 2, shots_per_state = 0;
  auto* jones = app.add_subcommand("jones", "Jones polynomial at t = exp(-2 pi i/5)");
  jones->add_option("--word", word, "Signed generator indices, or 'trefoil'");
  jones->add_option("--file", file, "Braid-word file")->check(CLI::ExistingFile);
  jones->add_option("--strands", strands)->capture_default_str();
  jones->add_option("--convention", convention)->check(CLI::IsMember({"kl", "paper"}))->capture_default_str();
  jones->add_option("--shots", shots_per_state, "Shots per basis state (0: exact trace)")->capture_default_str();
  shared(jones);

  std::string init = "101", gates = "0 0 0", window = "bulk", fit_outcome;
  std::uint64_t shots = 1024;
  double noise_p = 0.0;
  int trajectories = 200;
  bool post = false;
  std::optional<double> fit_target;
  auto* simulate = app.add_subcommand("simulate", "Sample a gate sequence, optionally with depolarizing noise");
  simulate->add_option("--init", init)->capture_default_str();
  simulate->add_option("--word", gates, "Gate indices; leading '-' for inverse")->capture_default_str();
  simulate->add_option("--window", window)->check(CLI::IsMember({"bulk", "generator"}))->capture_default_str();
  simulate->add_option("--shots", shots)->capture_default_str();
  simulate->add_option("--noise-p", noise_p)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  simulate->add_option("--trajectories", trajectories)->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_flag("--post-select", post);
  simulate->add_option("--fit-target", fit_target, "Fit p so that P(outcome) matches this value");
  simulate->add_option("--fit-outcome", fit_outcome, "Outcome for --fit-target (default: --init)");
  shared(simulate);

  int rounds = 1;
  auto* leak = app.add_subcommand("leak", "Idle-channel leakage out of the code space");
  leak->add_option("--init", init)->capture_default_str();
  leak->add_option("--rounds", rounds)->check(CLI::NonNegativeNumber)->capture_default_str();
  leak->add_option("--noise-p", noise_p)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  leak->add_option("--trajectories", trajectories)->check(CLI::PositiveNumber)->capture_default_str();
  leak->add_option("--shots", shots)->capture_default_str();
  shared(leak);

  int export_n = 3;
  std::string what = "all", out_dir;
  auto* exp = app.add_subcommand("export", "Write basis, operators, gate or Pauli map as JSON");
  exp->add_option("--n", export_n)->capture_default_str();
  exp->add_option("--what", what, "basis|V|P|B|Pprime|Bprime|bgate|hamiltonian|all")->capture_default_str();
  exp->add_option("--output-dir", out_dir, "Defaults to $QIC_OUTPUT_DIR or the working directory");
  shared(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(o, n_min, n_max, local_only);
    if (*dims) return cmd_dims(o, dims_max, forbidden);
    if (*jones) return cmd_jones(o, word, file, strands, convention, shots_per_state);
    if (*simulate) {
      return cmd_simulate(o, init, gates, window, shots, noise_p, trajectories, post, fit_target, fit_outcome);
    }
    if (*leak) return cmd_leak(o, init, rounds, noise_p, trajectories, shots);
    if (*exp) return cmd_export(o, export_n, what, out_dir);
  } catch (const qic::ResourceGuardError& e) {
    std::cerr << "qic: " << e.what() << '\n';
    return kGuard;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "qic: " << e.what() << '\n';
    return kUsage;
  } catch (const qic::ParseError& e) {
    std::cerr << "qic: " << e.what() << '\n';
    return kUsage;
  } catch (const qic::BoundsError& e) {
    std::cerr << "qic: " << e.what() << '\n';
    return kUsage;
  } catch (const qic::DimensionError& e) {
    std::cerr << "qic: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qic: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}
