#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "poincare/actors.hpp"
#include "poincare/ff/crt.hpp"
#include "poincare/ff/interpolate.hpp"
#include "poincare/ff/linear_solve.hpp"
#include "poincare/ff/prime_field.hpp"
#include "poincare/ff/sampling.hpp"
#include "poincare/int_polynomial.hpp"
#include "poincare/parallel.hpp"
#include "poincare/report.hpp"

namespace poincare {

struct SolverConfig {
  std::uint64_t seed = 42;
  ff::PrimeSet primes = ff::PrimeSet::paper();
  int max_resample_retries = 5;
  int max_tau_replacements = 10;
  unsigned jobs = 1;
  /// Upper bound on primes consumed by the Auto policy.
  std::size_t max_auto_primes = 64;
  PhaseTimes* timings = nullptr;
};

/// alpha_0 modulo one prime: the interpolation nodes and the coefficients.
struct AlphaTrace {
  std::uint64_t prime = 0;
  std::vector<ff::Node> nodes;
  std::vector<std::uint64_t> coefficients;
};

struct AlphaPolynomial {
  IntPolynomial poly;
  Parameters params;
  std::vector<AlphaTrace> traces;
};

/// Every resample of the z-points at one tau gave a singular system.
class ExhaustedRetries : public std::runtime_error {
public:
  ExhaustedRetries(std::uint64_t prime, std::uint64_t tau)
      : std::runtime_error("singular system persisted at tau=" + std::to_string(tau) + " mod " +
                           std::to_string(prime)),
        prime_(prime), tau_(tau) {}
  [[nodiscard]] std::uint64_t prime() const noexcept { return prime_; }
  [[nodiscard]] std::uint64_t tau() const noexcept { return tau_; }

private:
  std::uint64_t prime_;
  std::uint64_t tau_;
};

/// The lifted alpha_0 broke one of its structural invariants.
class ValidationFailed : public std::runtime_error {
public:
  ValidationFailed(IntPolynomial alpha, CheckReport report)
      : std::runtime_error("alpha_0 validation failed: " + report.first_failure().value_or(Check{}).name),
        alpha_(std::move(alpha)), report_(std::move(report)) {}
  [[nodiscard]] const IntPolynomial& alpha() const noexcept { return alpha_; }
  [[nodiscard]] const CheckReport& report() const noexcept { return report_; }

private:
  IntPolynomial alpha_;
  CheckReport report_;
};

namespace detail {

/// Fills the (m-1)x(m-1) system whose solution is (alpha_0(tau), ..., alpha_{m-2}(tau)):
/// row j is the identity phi = sum_k alpha_k (z^k q - z^{m-2-k} p) at z = zetas[j].
inline ff::ModMatrix build_alpha_system(const ActorEvaluator& actors, const ff::PrimeField& f,
                                        const std::vector<std::uint64_t>& zetas, std::uint64_t tau,
                                        std::uint64_t r_at_tau) {
  const std::size_t unknowns = static_cast<std::size_t>(actors.params().m - 1);
  ff::ModMatrix sys(unknowns);
  std::vector<std::uint64_t> powers(unknowns);
  for (std::size_t j = 0; j < unknowns; ++j) {
    const auto zeta = zetas[j];
    powers[0] = 1;
    for (std::size_t k = 1; k < unknowns; ++k) powers[k] = f.mul(powers[k - 1], zeta);
    const auto pv = actors.p(f, zeta, tau);
    const auto qv = actors.q(f, zeta, tau);
    for (std::size_t k = 0; k < unknowns; ++k) {
      sys(j, k) = f.sub(f.mul(powers[k], qv), f.mul(powers[unknowns - 1 - k], pv));
    }
    // phi = zeta^{m-2} (zeta^2 - 1) r(tau); zeta^{m-2} is the last power.
    sys.rhs(j) = f.mul(f.mul(powers[unknowns - 1], f.sub(f.mul(zeta, zeta), 1)), r_at_tau);
  }
  return sys;
}

inline std::optional<std::uint64_t> try_alpha_at(const ActorEvaluator& actors, const ff::PrimeField& f,
                                                 std::uint64_t tau, std::uint64_t r_at_tau, ff::Rng& rng,
                                                 int retries, PhaseTimes* timings) {
  const auto& params = actors.params();
  const std::size_t unknowns = static_cast<std::size_t>(params.m - 1);
  static const std::unordered_set<std::uint64_t> no_zero{0};
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<std::uint64_t> zetas;
    {
      ScopedPhase timer(timings, Phase::Sampling);
      zetas = ff::sample_distinct(rng, unknowns, f, no_zero);
    }
    ScopedPhase timer(timings, Phase::Solves);
    auto sys = build_alpha_system(actors, f, zetas, tau, r_at_tau);
    if (auto x = ff::solve_linear(f, sys)) return x->front();
  }
  return std::nullopt;
}

inline void check_field_capacity(const Parameters& params, const ff::PrimeField& f) {
  const auto nodes = static_cast<std::uint64_t>(params.alpha_deg + 1);
  const auto zetas = static_cast<std::uint64_t>(params.m - 1);
  if (f.modulus() <= nodes || f.modulus() <= zetas) {
    throw std::domain_error("prime " + std::to_string(f.modulus()) + " too small for n=" +
                            std::to_string(params.n));
  }
}

constexpr std::uint64_t tau_stream_tag = 0x7a75ULL;

}  // namespace detail

/// alpha_0(tau) mod l. Resamples the z-points on a singular system, up to
/// config.max_resample_retries times, then throws ExhaustedRetries.
inline std::uint64_t alpha_at(const Parameters& params, const ff::PrimeField& f, std::uint64_t tau, ff::Rng& rng,
                              int max_resample_retries = 5) {
  if (max_resample_retries < 1) throw std::domain_error("retries must be at least 1");
  detail::check_field_capacity(params, f);
  const ActorEvaluator actors(params);
  const auto r_at_tau = f.evaluate(build_r(params).reduce_mod(f.modulus()), tau);
  auto v = detail::try_alpha_at(actors, f, tau, r_at_tau, rng, max_resample_retries, nullptr);
  if (!v) throw ExhaustedRetries(f.modulus(), tau);
  return *v;
}

namespace detail {

/// Per-prime state for one run of the node grid.
struct PrimeJob {
  ff::PrimeField field;
  std::uint64_t stream;  // substream id (prime index unless overridden)
  std::vector<std::uint64_t> r_mod;
  ff::Rng tau_rng;
  std::vector<std::uint64_t> taus;
  std::unordered_set<std::uint64_t> used;
  std::vector<std::optional<std::uint64_t>> values;
  std::vector<int> generation;
};

inline PrimeJob make_prime_job(const Parameters& params, const IntPolynomial& r, std::uint64_t prime,
                               std::uint64_t stream, const SolverConfig& config) {
  PrimeJob job{ff::PrimeField(prime), stream, {}, ff::substream(config.seed, {stream, tau_stream_tag}), {}, {}, {}, {}};
  check_field_capacity(params, job.field);
  job.r_mod = r.reduce_mod(prime);
  const auto count = static_cast<std::size_t>(params.alpha_deg + 1);
  {
    ScopedPhase timer(config.timings, Phase::Sampling);
    job.taus = ff::sample_distinct(job.tau_rng, count, job.field);
  }
  job.used.insert(job.taus.begin(), job.taus.end());
  job.values.assign(count, std::nullopt);
  job.generation.assign(count, 0);
  return job;
}

/// Evaluates every pending node of every job, in parallel over the flattened
/// (job, node) grid, then replaces failed taus serially in (job, node) order.
inline void run_grid(const Parameters& params, std::vector<PrimeJob>& jobs, const SolverConfig& config) {
  const ActorEvaluator actors(params);
  for (;;) {
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t ji = 0; ji < jobs.size(); ++ji) {
      for (std::size_t ni = 0; ni < jobs[ji].values.size(); ++ni) {
        if (!jobs[ji].values[ni]) pending.emplace_back(ji, ni);
      }
    }
    if (pending.empty()) return;

    std::vector<char> failed(pending.size(), 0);
    parallel_for(pending.size(), config.jobs, [&](std::size_t i) {
      auto [ji, ni] = pending[i];
      auto& job = jobs[ji];
      const auto tau = job.taus[ni];
      auto rng = ff::substream(config.seed, {job.stream, ni, static_cast<std::uint64_t>(job.generation[ni])});
      const auto r_at_tau = job.field.evaluate(job.r_mod, tau);
      auto v = try_alpha_at(actors, job.field, tau, r_at_tau, rng, config.max_resample_retries, config.timings);
      if (v) {
        job.values[ni] = *v;
      } else {
        failed[i] = 1;
      }
    });

    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (!failed[i]) continue;
      auto [ji, ni] = pending[i];
      auto& job = jobs[ji];
      if (job.generation[ni] >= config.max_tau_replacements || job.used.size() >= job.field.modulus()) {
        throw ExhaustedRetries(job.field.modulus(), job.taus[ni]);
      }
      ++job.generation[ni];
      auto fresh = ff::sample_distinct(job.tau_rng, 1, job.field, job.used).front();
      job.used.insert(fresh);
      job.taus[ni] = fresh;
    }
  }
}

inline AlphaTrace finish_trace(const Parameters& params, const PrimeJob& job, PhaseTimes* timings) {
  AlphaTrace trace;
  trace.prime = job.field.modulus();
  trace.nodes.reserve(job.taus.size());
  for (std::size_t i = 0; i < job.taus.size(); ++i) trace.nodes.push_back({job.taus[i], *job.values[i]});
  ScopedPhase timer(timings, Phase::Interpolation);
  trace.coefficients = ff::interpolate(job.field, trace.nodes, static_cast<std::size_t>(params.alpha_deg));
  return trace;
}

inline std::vector<AlphaTrace> traces_for(const Parameters& params, const IntPolynomial& r,
                                          const std::vector<std::pair<std::uint64_t, std::uint64_t>>& primes,
                                          const SolverConfig& config) {
  std::vector<PrimeJob> jobs;
  jobs.reserve(primes.size());
  for (auto [prime, stream] : primes) jobs.push_back(make_prime_job(params, r, prime, stream, config));
  run_grid(params, jobs, config);
  std::vector<AlphaTrace> out;
  out.reserve(jobs.size());
  for (const auto& job : jobs) out.push_back(finish_trace(params, job, config.timings));
  return out;
}

inline IntPolynomial lift(const std::vector<AlphaTrace>& traces, PhaseTimes* timings) {
  ScopedPhase timer(timings, Phase::Crt);
  std::vector<std::vector<std::uint64_t>> residues;
  std::vector<std::uint64_t> moduli;
  for (const auto& t : traces) {
    residues.push_back(t.coefficients);
    moduli.push_back(t.prime);
  }
  return ff::crt_lift(residues, moduli);
}

}  // namespace detail

/// alpha_0 mod one prime from alpha_deg+1 distinct random taus. `stream`
/// selects the random substream under config.seed.
inline AlphaTrace alpha_mod_prime(const Parameters& params, const ff::PrimeField& f, const SolverConfig& config,
                                  std::uint64_t stream = 0) {
  const auto r = build_r(params);
  return detail::traces_for(params, r, {{f.modulus(), stream}}, config).front();
}

/// Checks, in order: alpha(0) = 1; degree = d - 2s; the reflection symmetry
/// c_{D-k} = (-1)^{n+1} c_k; alpha(1) = 0 for even n; and for n = 0 mod 4,
/// divisibility of alpha/(1-t) by 1 + t^{s-1}.
inline CheckReport validate_alpha(const Parameters& params, const IntPolynomial& alpha) {
  CheckReport report;
  const BigInt c0 = alpha.coefficient(0);
  report.add("alpha(0) = 1", c0 == 1, "alpha(0) = " + c0.str());

  report.add("degree = d - 2s", alpha.degree() == params.alpha_deg,
             "degree " + std::to_string(alpha.degree()) + " != " + std::to_string(params.alpha_deg));

  const int sign = params.n % 2 == 1 ? 1 : -1;
  const auto deg = static_cast<std::size_t>(params.alpha_deg);
  std::string sym_detail;
  for (std::size_t k = 0; k <= deg && sym_detail.empty(); ++k) {
    if (alpha.coefficient(deg - k) != alpha.coefficient(k) * sign) {
      sym_detail = "c_" + std::to_string(deg - k) + " = " + alpha.coefficient(deg - k).str() + " but " +
                   (sign > 0 ? "" : "-") + "c_" + std::to_string(k) + " = " + BigInt(alpha.coefficient(k) * sign).str();
    }
  }
  if (alpha.degree() > params.alpha_deg) sym_detail = "nonzero coefficients beyond degree d - 2s";
  report.add(sign > 0 ? "palindromic (odd n)" : "anti-palindromic (even n)", sym_detail.empty(), sym_detail);

  if (!params.odd()) {
    const BigInt at1 = alpha.evaluate(1);
    report.add("alpha(1) = 0", at1 == 0, "alpha(1) = " + at1.str());
  }
  if (params.parity == Parity::Even4) {
    auto [bar, rem] = divide(alpha, IntPolynomial::binomial(-1, 1));
    bool ok = rem.is_zero();
    std::string detail = ok ? "" : "alpha not divisible by 1 - t";
    if (ok) {
      auto [q2, rem2] = divide(bar, IntPolynomial::binomial(+1, static_cast<std::size_t>(params.s - 1)));
      ok = rem2.is_zero();
      if (!ok) detail = "remainder " + rem2.to_string();
    }
    report.add("(alpha/(1-t)) divisible by 1 + t^(s-1)", ok, detail);
  }
  return report;
}

/// Runs the modular solver over the configured primes, lifts by CRT, and
/// validates the result. Fixed prime sets use every modulus; the Auto policy
/// adds primes until two consecutive cumulative lifts agree (at least two).
inline AlphaPolynomial compute_alpha(const Parameters& params, SolverConfig config) {
  const auto r = build_r(params);
  AlphaPolynomial out;
  out.params = params;

  if (config.primes.is_fixed()) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> primes;
    for (std::size_t i = 0; i < config.primes.size(); ++i) primes.emplace_back(config.primes.moduli()[i], i);
    if (primes.empty()) throw std::domain_error("empty prime set");
    out.traces = detail::traces_for(params, r, primes, config);
    out.poly = detail::lift(out.traces, config.timings);
  } else {
    std::optional<IntPolynomial> previous;
    for (std::size_t i = 0;; ++i) {
      if (i >= config.max_auto_primes) {
        throw std::runtime_error("CRT lift did not stabilise within " + std::to_string(config.max_auto_primes) +
                                 " primes");
      }
      const auto prime = config.primes.at(i);
      auto trace = detail::traces_for(params, r, {{prime, i}}, config).front();
      out.traces.push_back(std::move(trace));
      auto lifted = detail::lift(out.traces, config.timings);
      if (previous && *previous == lifted) {
        out.poly = std::move(lifted);
        break;
      }
      previous = std::move(lifted);
    }
  }

  auto report = validate_alpha(params, out.poly);
  if (!report.ok()) throw ValidationFailed(out.poly, std::move(report));
  return out;
}

}  // namespace poincare
