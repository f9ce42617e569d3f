#pragma once

#include <chrono>

#include "poincare/actors.hpp"
#include "poincare/alpha_engine.hpp"
#include "poincare/assembler.hpp"
#include "poincare/report.hpp"

namespace poincare {

struct SeriesResult {
  Parameters params;
  AlphaPolynomial alpha;
  PoincareRational series;
  CoefficientTable table;
  CheckReport checks;
  double wall_seconds = 0;
};

/// alpha_0 -> assemble -> structural checks for one n. The half table is
/// filled only when every hard check passes. Throws
/// ValidationFailed, InexactDivision or ExhaustedRetries.
inline SeriesResult compute_series(int n, const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SeriesResult out;
  out.params = derive_parameters(n);
  out.alpha = compute_alpha(out.params, config);
  out.series = assemble(out.params, out.alpha.poly, build_r(out.params));
  out.checks = structural_checks(out.series);
  if (out.checks.ok()) out.table = half_table(out.series);
  out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace poincare
