#pragma once

// Functional relations among the rectangular tableau sums T_m^a = T_{(m^a)}.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superbethe/dvf.hpp"

namespace superbethe {

/// Lazily filled table of T_m^a, each entry a column tableau sum. T_m^0 and
/// T_0^a are 1.
class TGrid {
 public:
  TGrid(RootSystemConfig cfg, ParamLayout layout);

  const RootSystemConfig& config() const noexcept { return cfg_; }
  const ParamLayout& layout() const noexcept { return layout_; }

  /// T_m^a; throws invalid_argument for a < 0 or m < 0.
  const TermSum& at(int a, int m);
  std::size_t cached() const noexcept { return cache_.size(); }

 private:
  RootSystemConfig cfg_;
  ParamLayout layout_;
  std::map<std::pair<int, int>, TermSum> cache_;
};

/// g_m^1(u) = prod_{j=1}^m P_1(u - m + 2j - 2); 1 for a >= 2 or m = 0.
FactoredTerm g_factor(const ParamLayout& layout, int a, int m);

/// T_m^a(u-1) T_m^a(u+1) - T_{m+1}^a T_{m-1}^a - g_m^a T_m^{a-1} T_m^{a+1}; a, m >= 1.
TermSum hirota_residual(TGrid& grid, int a, int m);

/// g_m^a(u+1) g_m^a(u-1) - g_{m+1}^a(u) g_{m-1}^a(u); a, m >= 1.
TermSum g_identity_residual(const ParamLayout& layout, int a, int m);

/// T_m^{r+1}(u) - F^{m-s}(u+r-s+2) Q_{r+1}(u-m)/Q_{r+1}(u+m-2s-2) T_{s+1}^{r+1}(u+m-s-1); m >= s+1.
TermSum red1_residual(TGrid& grid, int m);
/// T_{s+1}^a(u) - (-1)^{(s+1)(a-r-1)} Q_{r+1}(u-a-s+r)/Q_{r+1}(u+a-s-r-2) T_{s+1}^{r+1}(u+a-r-1); a >= r+1.
TermSum red2_residual(TGrid& grid, int a);
/// T_{a+s}^{r+1}(u) - (-1)^{(s+1)(a-1)} F^a(u+r-s+2) T_{s+1}^{r+a}(u); a >= 1.
TermSum dual_residual(TGrid& grid, int a);
/// T_m^{r+1}(u-1) T_m^{r+1}(u+1) - T_{m+1}^{r+1} T_{m-1}^{r+1}; m >= s+2.
TermSum laplace1_residual(TGrid& grid, int m);
/// T_{s+1}^a(u-1) T_{s+1}^a(u+1) - g_{s+1}^a T_{s+1}^{a-1} T_{s+1}^{a+1}; a >= r+2.
TermSum laplace2_residual(TGrid& grid, int a);
/// T_{s+1}^{r+1}(u-1) T_{s+1}^{r+1}(u+1)
///   - T_{s+2}^{r+1}(T_s^{r+1} + (-1)^{s+1} g_{s+1}^{r+1} T_{s+1}^r / F^2(u+r-s+2)).
/// The g factor is 1 unless r = 0.
TermSum boundary_residual(TGrid& grid);

/// Whether T_m^a is identically zero: the empty sum, or a sum certified zero
/// at the given parameters.
bool vanishing_check(TGrid& grid, int a, int m, const Valuation<BigRational>& val);

struct ReductionEntry {
  std::string relation;  // red1, red2, dual, laplace1, laplace2, boundary
  int index = 0;         // m, a or 0
  TermSum residual;
};

/// Every reduction residual with index up to `max_index` inside its range.
std::vector<ReductionEntry> reduction_residuals(TGrid& grid, int max_index);

}  // namespace superbethe
