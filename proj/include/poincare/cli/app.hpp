#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "poincare/cli/table_file.hpp"
#include "poincare/fixture5.hpp"
#include "poincare/pipeline.hpp"
#include "poincare/sylvester_oracle.hpp"

namespace poincare::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct CommonOptions {
  std::uint64_t seed = 42;
  std::string primes = "paper";
  unsigned prime_bits = 31;
  unsigned jobs = 1;
  bool bench = false;
  int max_n = 30;
};

/// Thrown for argument values CLI11 cannot validate on its own.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline SolverConfig make_config(const CommonOptions& opts, PhaseTimes* timings) {
  SolverConfig config;
  config.seed = opts.seed;
  config.primes = opts.primes == "auto" ? ff::PrimeSet::automatic(opts.prime_bits) : ff::PrimeSet::paper();
  config.jobs = std::max(1u, opts.jobs);
  config.timings = timings;
  return config;
}

inline TableEntry make_entry(const SeriesResult& r, const SolverConfig& config) {
  TableEntry e;
  e.table = r.table;
  e.s = r.params.s;
  e.parity = r.params.parity;
  e.factors = r.series.factors;
  e.seed = config.seed;
  for (const auto& t : r.alpha.traces) e.primes.push_back(t.prime);
  e.wall_seconds = r.wall_seconds;
  return e;
}

inline void print_bench(std::ostream& err, const PhaseTimes& times, double total) {
  err << std::fixed << std::setprecision(3) << "bench:";
  for (auto p : {Phase::Sampling, Phase::Solves, Phase::Interpolation, Phase::Crt, Phase::Certify}) {
    err << ' ' << phase_name(p) << '=' << times.seconds(p) << 's';
  }
  err << " total=" << total << "s\n";
  err.unsetf(std::ios::fixed);
}

inline void check_n(int n, const CommonOptions& opts) {
  if (n < 3 || n > opts.max_n) {
    throw UsageError("n must lie in [3, " + std::to_string(opts.max_n) + "], got " + std::to_string(n));
  }
}

namespace detail {

/// Runs the pipeline for one n; on a mathematical failure prints the
/// diagnostic and returns nullopt.
inline std::optional<SeriesResult> compute_or_report(int n, const SolverConfig& config, std::ostream& err) {
  try {
    auto r = compute_series(n, config);
    if (!r.checks.ok()) {
      err << "n=" << n << ": structural check failed\n" << r.checks;
      return std::nullopt;
    }
    for (const auto& w : r.checks.warnings()) err << "n=" << n << ": warning: " << w.name << " (" << w.detail << ")\n";
    return r;
  } catch (const ValidationFailed& e) {
    err << "n=" << n << ": " << e.what() << "\n" << e.report() << "  alpha_0 = " << e.alpha() << "\n";
  } catch (const InexactDivision& e) {
    err << "n=" << n << ": " << e.what() << "\n";
  } catch (const ExhaustedRetries& e) {
    err << "n=" << n << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

inline std::pair<std::filesystem::path, std::filesystem::path> output_paths(const std::filesystem::path& out) {
  const auto ext = out.extension().string();
  if (ext == ".json") return {out, std::filesystem::path(out).replace_extension(".txt")};
  if (ext == ".txt") return {std::filesystem::path(out).replace_extension(".json"), out};
  return {out.string() + ".json", out.string() + ".txt"};
}

/// Returns the entry when the cached half table survives re-validation.
inline std::optional<TableEntry> load_cached(const ResultCache& cache, int n) {
  auto e = cache.load(n);
  if (!e) return std::nullopt;
  const auto params = derive_parameters(n);
  if (e->table.delta != params.delta || e->s != params.s || e->parity != params.parity) return std::nullopt;
  try {
    const auto series = series_from_half(params, e->table.half);
    if (!structural_checks(series).ok()) return std::nullopt;
    e->factors = series.factors;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return e;
}

}  // namespace detail

inline int cmd_compute(int n, const std::string& emit, std::optional<int> howe_k, bool verbose,
                       const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  check_n(n, opts);
  PhaseTimes times;
  const auto config = make_config(opts, opts.bench ? &times : nullptr);
  auto result = detail::compute_or_report(n, config, err);
  if (!result) return kCheckFailed;
  const auto entry = make_entry(*result, config);
  if (emit == "json") {
    out << entry_to_json(entry).dump() << "\n";
  } else {
    out << text_line(entry.table) << "\n";
    out << "B[" << n << "] = " << format_factors(entry.factors) << "\n";
  }
  if (verbose) err << result->checks;
  if (howe_k) {
    // Denominators in the form prod_{j=2}^{n-1}(1 - t^{2j}) (odd n) or
    // prod_{j=2}^{n-1}(1 - t^j) (even n).
    const auto den = n % 2 ? product_denominator(2, n - 1, 2) : product_denominator(2, n - 1);
    try {
      out << "numerator over " << format_factors(den) << ": [t^" << *howe_k
          << "] = " << howe_coefficient(result->series, den, *howe_k) << "\n";
    } catch (const InexactDivision& e) {
      err << "n=" << n << ": " << e.what() << "\n";
      return kCheckFailed;
    }
  }
  if (opts.bench) print_bench(err, times, result->wall_seconds);
  return kOk;
}

inline int cmd_table(int from, int to, const std::string& out_path, const CommonOptions& opts, std::ostream& out,
                     std::ostream& err) {
  check_n(from, opts);
  check_n(to, opts);
  if (from > to) throw UsageError("--from must not exceed --to");
  PhaseTimes times;
  const auto config = make_config(opts, opts.bench ? &times : nullptr);
  const auto cache = ResultCache::from_environment();
  const auto start = std::chrono::steady_clock::now();

  TableFile file;
  file.seed = opts.seed;
  file.prime_policy = opts.primes;
  std::vector<int> missing;
  for (int n = from; n <= to; ++n) {
    if (cache) {
      if (auto hit = detail::load_cached(*cache, n)) {
        file.entries[n] = std::move(*hit);
        continue;
      }
    }
    missing.push_back(n);
  }

  // Several n at once: one worker per n, each solving its grid serially.
  const unsigned outer = missing.size() > 1 ? config.jobs : 1u;
  auto per_n = config;
  if (outer > 1) per_n.jobs = 1;
  std::vector<std::optional<SeriesResult>> results(missing.size());
  std::vector<std::ostringstream> logs(missing.size());
  parallel_for(missing.size(), outer,
               [&](std::size_t i) { results[i] = detail::compute_or_report(missing[i], per_n, logs[i]); });

  for (std::size_t i = 0; i < missing.size(); ++i) {
    err << logs[i].str();
    if (!results[i]) {
      err << "table aborted at n=" << missing[i] << "\n";
      return kCheckFailed;
    }
    auto& entry = file.entries[missing[i]] = make_entry(*results[i], config);
    if (cache) cache->store(entry);
  }

  if (out_path.empty()) {
    out << table_to_text(file);
  } else {
    const auto [json_path, text_path] = detail::output_paths(out_path);
    write_file(json_path, table_to_json(file).dump(2) + "\n");
    write_file(text_path, table_to_text(file));
    out << "wrote " << json_path.string() << " and " << text_path.string() << "\n";
  }
  if (opts.bench) {
    print_bench(err, times, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return kOk;
}

inline int cmd_certify(int n, const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  check_n(n, opts);
  PhaseTimes times;
  const auto config = make_config(opts, opts.bench ? &times : nullptr);
  auto result = detail::compute_or_report(n, config, err);
  if (!result) return kCheckFailed;
  Certification cert;
  {
    ScopedPhase timer(opts.bench ? &times : nullptr, Phase::Certify);
    cert = certify(result->series);
  }
  if (cert.certified) {
    out << "CERTIFIED n=" << n << " K=" << cert.depth << "\n";
  } else {
    out << "MISMATCH n=" << n << " k=" << *cert.first_bad_k << " expected " << cert.expected << " got "
        << cert.actual << "\n";
  }
  if (opts.bench) print_bench(err, times, result->wall_seconds + times.seconds(Phase::Certify));
  return cert.certified ? kOk : kCheckFailed;
}

inline int cmd_fixture5(bool verbose, bool inject_fault, const CommonOptions& opts, std::ostream& out,
                        std::ostream& err) {
  const auto fx = Fixture5::make(inject_fault);
  const bool bezout = fx.bezout_identity_holds();
  const bool reflection = fx.reflection_holds();
  out << "a*q + b*p = phi: " << (bezout ? "ok" : "FAIL") << "\n";
  out << "b(z,t) = -z^7 a(1/z,t): " << (reflection ? "ok" : "FAIL") << "\n";
  if (verbose) {
    err << "terms: a*q + b*p has " << fx.combination().term_count() << ", phi has " << fx.phi.term_count() << "\n";
    err << "terms: b has " << fx.b.term_count() << ", -z^7 a(1/z,t) has " << fx.a.reflect_z(7).term_count()
        << "\n";
  }
  bool alpha_ok = false;
  try {
    const auto alpha = compute_alpha(derive_parameters(5), make_config(opts, nullptr));
    alpha_ok = alpha.poly == fx.a.z_coefficient(0);
    out << "alpha_0 = " << alpha.poly << " matches a(0,t): " << (alpha_ok ? "ok" : "FAIL") << "\n";
  } catch (const std::exception& e) {
    err << e.what() << "\n";
  }
  return bezout && reflection && alpha_ok ? kOk : kCheckFailed;
}

inline int cmd_verify(const std::string& against, const CommonOptions& opts, std::ostream& out,
                      std::ostream& err) {
  const auto tables = load_tables(against);
  if (tables.empty()) throw IoError(against + ": no entries");
  const auto config = make_config(opts, nullptr);
  int mismatches = 0;
  for (const auto& [n, expected] : tables) {
    check_n(n, opts);
    auto result = detail::compute_or_report(n, config, err);
    if (!result) {
      ++mismatches;
      continue;
    }
    const auto& got = result->table.half;
    if (got == expected.half) {
      out << "A[" << n << "]: ok\n";
      continue;
    }
    ++mismatches;
    std::size_t i = 0;
    while (i < got.size() && i < expected.half.size() && got[i] == expected.half[i]) ++i;
    out << "A[" << n << "]: differs at c_" << i;
    if (i < got.size() && i < expected.half.size()) {
      out << " (file " << expected.half[i] << ", computed " << got[i] << ")";
    } else {
      out << " (length: file " << expected.half.size() << ", computed " << got.size() << ")";
    }
    out << "\n";
  }
  return mismatches == 0 ? kOk : kCheckFailed;
}

/// Entry point shared by the executable and the test suites. args excludes
/// the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincare series of invariants of binary forms", "poincare"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  CommonOptions opts;
  auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("--seed", opts.seed, "master random seed")->capture_default_str();
    sub->add_option("--primes", opts.primes, "prime policy")
        ->check(CLI::IsMember({"paper", "auto"}))
        ->capture_default_str();
    sub->add_option("--prime-bits", opts.prime_bits, "bit size for --primes auto")
        ->check(CLI::Range(8u, 32u))
        ->capture_default_str();
    sub->add_option("--jobs,-j", opts.jobs, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    sub->add_option("--max-n", opts.max_n, "largest accepted n")->capture_default_str();
    sub->add_flag("--bench", opts.bench, "print per-phase wall time to stderr");
  };

  int n = 0;
  std::string emit = "text";
  std::optional<int> howe_k;
  bool verbose = false;
  auto* compute = app.add_subcommand("compute", "compute P_n and print its half table and denominator");
  compute->add_option("--n", n, "degree of the binary form")->required();
  compute->add_option("--emit", emit, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  compute->add_option("--howe-k", howe_k, "also print the t^k numerator coefficient over prod(1-t^j)");
  compute->add_flag("--verbose,-v", verbose, "print the structural check report");
  add_common(compute);

  int from = 0, to = 0;
  std::string out_path;
  auto* table = app.add_subcommand("table", "compute half tables for a range of n");
  table->add_option("--from", from, "first n")->required();
  table->add_option("--to", to, "last n")->required();
  table->add_option("--out", out_path, "output path; writes .json and .txt siblings");
  add_common(table);

  auto* cert = app.add_subcommand("certify", "check P_n against Cayley-Sylvester dimensions");
  cert->add_option("--n", n, "degree of the binary form")->required();
  add_common(cert);

  bool inject_fault = false;
  auto* fixture = app.add_subcommand("fixture5", "check the hand-written n=5 cofactor identity");
  fixture->add_flag("--verbose,-v", verbose, "print term counts of both sides");
  fixture->add_flag("--inject-fault", inject_fault, "drop one term of a before checking");
  add_common(fixture);

  std::string against;
  auto* verify = app.add_subcommand("verify", "diff a table file against freshly computed results");
  verify->add_option("--against", against, "table file (.json or text)")->required();
  add_common(verify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(n, emit, howe_k, verbose, opts, out, err);
    if (table->parsed()) return cmd_table(from, to, out_path, opts, out, err);
    if (cert->parsed()) return cmd_certify(n, opts, out, err);
    if (fixture->parsed()) return cmd_fixture5(verbose, inject_fault, opts, out, err);
    if (verify->parsed()) return cmd_verify(against, opts, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}

}  // namespace poincare::cli
