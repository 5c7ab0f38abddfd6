#pragma once

// Dressed-vacuum-form functions: box functions z(a;u), the tableau sum
// T_{lambda⊂mu}(u), generating-series T^a / T_m, quantum Jacobi-Trudi
// determinants and the contravariant, mixed and A/B variants.

#include <string>
#include <vector>

#include "superbethe/diagrams.hpp"
#include "superbethe/qarith.hpp"
#include "superbethe/tableaux.hpp"

namespace superbethe {

class Rng;

/// Q_color(u + shift)^exp inside a box function.
struct QFactor {
  int color;
  int shift;
  int exp;
};

/// z(a;u) = P_1(u + vacuum_shift) * prod Q-factors.
struct BoxFunction {
  int label;
  int vacuum_shift;
  std::vector<QFactor> q;
};

/// A grading preset: graded alphabet, box table and Bethe-equation data.
struct RootSystemConfig {
  std::string name;
  int r = 0;
  int s = 0;
  LabelSet labels;
  std::vector<BoxFunction> boxes;      // parallel to the label order
  std::vector<std::vector<int>> cartan;  // (alpha_a|alpha_b), a,b = 1..r+s+1 (0-based storage)
  std::vector<int> t_signs;            // t_a
  std::vector<int> degrees;            // deg(alpha_a)
  int vacuum_color = 1;                // the color a with P_a = prod [u - w_j]

  int colors() const noexcept { return r + s + 1; }
  const BoxFunction& box(int label) const;
};

RootSystemConfig distinguished_covariant(int r, int s);
/// Contravariant alphabet -r-s-2 < ... < -1 with the vacuum parts of a
/// covariant fundamental quantum space.
RootSystemConfig distinguished_contravariant(int r, int s);
RootSystemConfig sl12_app_c();
RootSystemConfig sl12_app_d();
/// "distinguished-covariant", "distinguished-contravariant", "sl12-appC",
/// "sl12-appD". r and s are ignored by the sl(1|2) presets.
RootSystemConfig make_preset(const std::string& name, int r, int s);

/// Cartan pairings of the distinguished simple roots from the epsilon/delta
/// forms.
std::vector<std::vector<int>> distinguished_cartan(int r, int s);

/// Assignment of symbolic parameter slots: sites w_1..w_N, then the roots
/// u_k^{(a)} color by color. With `homogeneous` every site sits at the
/// origin (w = 0).
class ParamLayout {
 public:
  ParamLayout() = default;
  ParamLayout(int n_sites, std::vector<int> counts, bool homogeneous = false);

  int n_sites() const noexcept { return n_sites_; }
  bool homogeneous() const noexcept { return homogeneous_; }
  int colors() const noexcept { return static_cast<int>(counts_.size()); }
  /// N_a for a = 1..colors(); zero outside that range.
  int count(int color) const noexcept;
  const std::vector<int>& counts() const noexcept { return counts_; }
  std::uint32_t site_slot(int j) const;           // j = 1..N
  std::uint32_t root_slot(int color, int k) const;  // k = 1..N_a
  /// Number of non-origin slots.
  int num_slots() const noexcept { return num_slots_; }

 private:
  int n_sites_ = 0;
  bool homogeneous_ = false;
  std::vector<int> counts_;
  std::vector<int> offsets_;
  int num_slots_ = 0;
};

/// Numeric values of q, the inhomogeneities and the Bethe roots, all as
/// y = q^{u} values.
template <class F>
struct BetheRootSet {
  ParamLayout layout;
  F q;
  std::vector<F> w;                 // size N (ignored when homogeneous)
  std::vector<std::vector<F>> roots;  // roots[a-1][k-1]
  bool random_draw = true;

  Valuation<F> valuation() const;
};

/// Independent random rationals for every slot, redrawn until no two slots
/// are related by +-q^k with |k| <= max_shift.
BetheRootSet<BigRational> random_roots(const ParamLayout& layout, const BigRational& q, Rng& rng,
                                       int max_shift = 24);
BetheRootSet<Complex> to_complex(const BetheRootSet<BigRational>& rs);

/// P_1(u + shift)^exp.
FactoredTerm p_factor(const ParamLayout& layout, int shift, int exp = 1);
/// Q_color(u + shift)^exp; 1 for colors outside 1..colors().
FactoredTerm q_factor(const ParamLayout& layout, int color, int shift, int exp = 1);
inline TermSum p_function(const ParamLayout& layout) { return TermSum(p_factor(layout, 0)); }
inline TermSum q_function(const ParamLayout& layout, int color) {
  return TermSum(q_factor(layout, color, 0));
}

/// z(label; u), without the grading sign.
FactoredTerm z_function(const RootSystemConfig& cfg, const ParamLayout& layout, int label);

/// F^a(u) of the generating series; throws for a < 0 (identically zero).
FactoredTerm f_factor(const ParamLayout& layout, int a);
/// F_{lambda⊂mu}(u).
FactoredTerm f_normalizer(const ParamLayout& layout, const SkewShape& shape);

/// (1/F) * sum over admissible tableaux of prod (-1)^p z(b; u - mu_1 + mu'_1 - 2i + 2j).
TermSum t_skew(const RootSystemConfig& cfg, const ParamLayout& layout, const SkewShape& shape);

/// The signed z-product of one tableau, before normalization.
FactoredTerm tableau_term(const RootSystemConfig& cfg, const ParamLayout& layout, const Tableau& t);

enum class SeriesKind { column, row };

/// Noncommutative expansion in the shift X (X f(u) = f(u+2) X) of the
/// graded generating products. Returns the coefficients c_0..c_order.
std::vector<TermSum> generating_coefficients(const RootSystemConfig& cfg, const ParamLayout& layout,
                                             SeriesKind kind, int order);

/// T^n (column) or T_n (row) recovered from the generating series.
TermSum t_series(const RootSystemConfig& cfg, const ParamLayout& layout, SeriesKind kind, int n);

/// All T^k or T_k for 0 <= k <= max_n from one expansion.
std::vector<TermSum> t_series_table(const RootSystemConfig& cfg, const ParamLayout& layout,
                                    SeriesKind kind, int max_n);

enum class JtAxis { column, row };

inline constexpr int kMaxDeterminantSize = 7;

/// Determinant of a square TermSum matrix by cofactor expansion with memoized
/// minors. Throws matrix_too_large beyond kMaxDeterminantSize.
TermSum determinant(const std::vector<std::vector<TermSum>>& m);

/// The row-axis determinant det T_{mu_j - lambda_i + i - j}(...) as printed.
/// With sites present it equals F_{lambda⊂mu} times the tableau sum.
TermSum row_determinant(const RootSystemConfig& cfg, const ParamLayout& layout,
                        const SkewShape& shape);

/// The quantum Jacobi-Trudi determinant for the shape along the given axis.
/// The row axis is divided by F_{lambda⊂mu}, see row_determinant.
TermSum jacobi_trudi(const RootSystemConfig& cfg, const ParamLayout& layout, const SkewShape& shape,
                     JtAxis axis);

/// sum over (a,b) != (-1,1) of (-1)^{p(a)+p(b)} zdot(a;u+s) z(b;u+r) minus
/// (Tdot^1(u+s) T^1(u+r) - 1), for trivial vacuum. Throws equal_rank if r == s.
TermSum mixed_identity_residual(int r, int s, const ParamLayout& layout);

/// z(a;u) - (-1)^N zdot(-a; s-r-u) with every parameter negated.
TermSum crossing_residual(int r, int s, int a, const ParamLayout& layout);

enum class AbKind { a_row, a_col, b_row, b_col };

/// A_k (a_row), A^l (a_col), B_k (b_row) or B^l (b_col) for the covariant
/// alphabet with trivial vacuum.
TermSum ab_function(const RootSystemConfig& cfg, const ParamLayout& layout, AbKind kind, int n);

/// T^a minus sum_l B_{a-l}(u-l) A^l(u+a-l) (column) or T_m minus
/// sum_l A_{m-l}(u-l) B^l(u+m-l) (row).
TermSum convolution_residual(const RootSystemConfig& cfg, const ParamLayout& layout,
                             SeriesKind kind, int n);

/// Term of the top tableau of a straight shape: prod (-1)^p z(b; u + mu'_1 - mu_1 - 2i + 2j).
FactoredTerm top_term(const RootSystemConfig& cfg, const ParamLayout& layout, const Partition& mu);

/// (-1)^{sum_{i>=r+2} mu_i} q^{-2 sum_b N_b a_b t_b}.
BigRational top_term_expected(const RootSystemConfig& cfg, const ParamLayout& layout,
                              const Partition& mu, const BigRational& q);

}  // namespace superbethe
