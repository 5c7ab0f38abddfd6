#pragma once

// Bethe ansatz equations: residuals, single-root enforcement, residue audits
// of T^a and a best-effort solver for small sectors.

#include <cstdint>
#include <vector>

#include "superbethe/dvf.hpp"

namespace superbethe {

/// Both sides of the equation for root (a,k), cross-multiplied:
/// value = P(u+1/t) Q_den + sigma Q_num P(u-1/t) at u = u_k^{(a)}, so that
/// value = 0 iff -P(u+1/t)/P(u-1/t) = sigma Q_num/Q_den. `scale` is the larger
/// magnitude of the two products.
template <class F>
struct BaeResidual {
  F value;
  double scale = 0.0;

  double relative() const;
};

template <class F>
BaeResidual<F> bae_residual(const RootSystemConfig& cfg, int a, int k, const BetheRootSet<F>& rs);

/// Largest relative residual over every root; 0 when there are no roots.
double max_bae_residual(const RootSystemConfig& cfg, const BetheRootSet<Complex>& rs);

/// Solves the single equation for y_k^{(a)} with every other parameter held
/// fixed. The cross-multiplied equation is a polynomial in y^2; its roots come
/// from the companion matrix and are polished by Newton steps. Every root
/// y = +-sqrt(z) that is finite, nonzero, generic against the other
/// parameters and meets the 1e-12 residual bound is returned.
std::vector<BetheRootSet<Complex>> enforce_single_root(const RootSystemConfig& cfg, int a, int k,
                                                       const BetheRootSet<Complex>& tmpl);

struct PoleAuditEntry {
  int a = 0;               // T^a
  int shift = 0;           // the atom [u + shift - u_k^{(b)}] whose zero is probed
  int branch = 1;          // m x0 = branch
  double sum_abs = 0.0;    // |sum of term residues|
  double max_term = 0.0;   // max |term residue|
  double relative = 0.0;   // sum_abs / max_term, 0 when no term is singular
};

struct PoleAudit {
  int color = 0;
  int index = 0;
  std::vector<PoleAuditEntry> entries;
  double max_relative = 0.0;
};

/// Residues of T^1..T^{a_max} (column tableau sums) at every zero of a
/// denominator atom that carries u_k^{(b)}.
PoleAudit pole_audit(const RootSystemConfig& cfg, int a_max, const BetheRootSet<Complex>& rs, int b,
                     int k);

struct SolveOptions {
  int starts = 64;
  int max_iterations = 200;
  double tolerance = 1e-10;
  double dedup = 1e-6;
};

/// Multi-start damped Newton on all cross-multiplied residuals. Sites and q
/// come from `tmpl`; its root values are ignored. Returns distinct solutions
/// with every relative residual below the tolerance and no coinciding or
/// singular roots; may be empty.
std::vector<BetheRootSet<Complex>> solve_full(const RootSystemConfig& cfg,
                                              const BetheRootSet<Complex>& tmpl, std::uint64_t seed,
                                              const SolveOptions& opt = {});

}  // namespace superbethe
