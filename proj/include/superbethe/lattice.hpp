#pragma once

// Graded vertex-model transfer matrices built from the fundamental L operator,
// for brute-force comparison with the tableau eigenvalues.

#include <cstddef>
#include <vector>

#include "superbethe/dvf.hpp"

namespace superbethe {

inline constexpr std::size_t kMaxTransferDimension = 4096;

/// Dense (r+s+2)^N square matrix; basis index sum_i (gamma_i - 1) d^{i-1}.
template <class F>
struct TransferMatrix {
  int r = 0;
  int s = 0;
  int n_sites = 0;
  std::size_t dim = 0;
  std::vector<F> entries;  // row-major, entries[row * dim + col]

  F& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
  const F& at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
};

/// Grading of the labels 1..r+s+2: 0 for a <= r+1, 1 otherwise.
int label_parity(int r, int a);

/// Basis labels gamma_1..gamma_N of a basis index.
std::vector<int> basis_labels(int r, int s, int n_sites, std::size_t index);

/// t(u) at x = q^u. `w` holds q^{w_j} per site (empty means every w_j = 0).
/// Throws dimension_too_large beyond kMaxTransferDimension.
template <class F>
TransferMatrix<F> transfer_matrix(int r, int s, int n_sites, const F& q, const F& x,
                                  const std::vector<F>& w = {});

/// ||AB - BA||_F / (||A||_F ||B||_F); exact inputs give exactly 0 on commuting pairs.
template <class F>
double commutator_norm(const TransferMatrix<F>& a, const TransferMatrix<F>& b);

/// True iff every nonzero entry connects basis states with the same label multiset.
template <class F>
bool preserves_sectors(const TransferMatrix<F>& t);

/// Eigenvalue on the all-ones state; throws invalid_argument if that state is
/// not an eigenvector.
template <class F>
F pseudo_vacuum_eigenvalue(const TransferMatrix<F>& t);

/// Eigenvalues of a float transfer matrix; throws diagonalization_failure.
std::vector<Complex> transfer_eigenvalues(const TransferMatrix<Complex>& t);

struct SpectralSample {
  Complex x;
  Complex rho;          // pseudo-vacuum eigenvalue / trivial-sector T^1
  Complex predicted;    // rho * T^1 with the solved roots
  Complex nearest;      // closest eigenvalue of t(x)
  double mismatch = 0;  // |nearest - predicted| / |predicted|
};

struct SpectralReport {
  std::vector<SpectralSample> samples;
  double max_mismatch = 0;
};

/// Compares rho(x) T^1(x) for the roots in `rs` against the spectrum of t(x)
/// at every sample point. Sites come from `rs` (q^{w_j}, or 0 when homogeneous).
SpectralReport spectral_match(const RootSystemConfig& cfg, const BetheRootSet<Complex>& rs,
                              const std::vector<Complex>& xs);

}  // namespace superbethe
