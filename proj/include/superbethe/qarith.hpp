#pragma once

// Factored q-bracket algebra.
//
// Every function handled by the engine is a finite sum of signed products of
// q-brackets [v] = (q^v - q^-v)/(q - q^-1) whose arguments are the spectral
// parameter u shifted by an integer and by (plus or minus) one symbolic
// parameter u_p. After the substitution x = q^u, y_p = q^{u_p} each bracket is
// (m x - 1/(m x))/(q - 1/q) with multiplier m = q^shift * y_p^(-sign), so a
// TermSum is a univariate rational function of x once a Valuation fixes q and
// the y_p.
//
// Terms are kept symbolic in the parameter slots: the same TermSum is
// evaluated exactly (GMP rationals) for identity certification and in
// complex doubles for Bethe-root numerics.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "superbethe/error.hpp"
#include "superbethe/fraction.hpp"

namespace superbethe {

using BigRational = mpq_class;
using Complex = std::complex<double>;

/// The bracket [u + shift - sign * u_param]. Slot 0 is the origin (u_0 = 0);
/// its sign is normalized to +1.
class AtomKey {
 public:
  static constexpr std::uint32_t kOrigin = 0;

  constexpr AtomKey() = default;
  static AtomKey make(std::uint32_t param, int sign, int shift);

  std::uint32_t param() const noexcept { return static_cast<std::uint32_t>(bits_ >> 33); }
  int sign() const noexcept { return ((bits_ >> 32) & 1U) != 0 ? -1 : +1; }
  int shift() const noexcept {
    return static_cast<int>(static_cast<std::int64_t>(bits_ & 0xffffffffULL) - kBias);
  }
  std::uint64_t raw() const noexcept { return bits_; }

  AtomKey shifted(int s) const { return make(param(), sign(), shift() + s); }

  friend auto operator<=>(AtomKey, AtomKey) = default;

  std::string to_string() const;

 private:
  static constexpr std::int64_t kBias = std::int64_t{1} << 31;
  std::uint64_t bits_ = static_cast<std::uint64_t>(kBias);
};

struct AtomPower {
  AtomKey atom;
  int exp = 0;

  friend bool operator==(const AtomPower&, const AtomPower&) = default;
};

/// coeff * prod atom^exp, atoms sorted by key with nonzero exponents.
class FactoredTerm {
 public:
  FactoredTerm() = default;  // the constant 1
  explicit FactoredTerm(Fraction coeff) : coeff_(coeff) {}
  FactoredTerm(Fraction coeff, std::vector<AtomPower> atoms);

  static FactoredTerm bracket(AtomKey atom, int exp = 1);

  const Fraction& coeff() const noexcept { return coeff_; }
  std::span<const AtomPower> atoms() const noexcept { return atoms_; }

  /// Total exponent, i.e. the degree in x of numerator minus denominator.
  int degree() const noexcept;
  int exponent_of(AtomKey atom) const noexcept;

  FactoredTerm inverse() const;
  FactoredTerm shifted(int s) const;
  FactoredTerm with_coeff(Fraction c) const;

  FactoredTerm& operator*=(const FactoredTerm& rhs);
  friend FactoredTerm operator*(FactoredTerm a, const FactoredTerm& b) { return a *= b; }

  friend bool operator==(const FactoredTerm&, const FactoredTerm&) = default;

  std::string to_string() const;

 private:
  friend class TermAccumulator;
  Fraction coeff_{1};
  std::vector<AtomPower> atoms_;
};

class TermSum;

/// Collects terms and merges those with identical atom multisets.
class TermAccumulator {
 public:
  void add(const Fraction& coeff, std::span<const AtomPower> atoms);
  void add(const FactoredTerm& term) { add(term.coeff(), term.atoms()); }
  void add(const TermSum& sum, const Fraction& scale = Fraction{1});
  /// Adds coeff * a * b without materializing the product term.
  void add_product(const Fraction& coeff, std::span<const AtomPower> a,
                   std::span<const AtomPower> b);
  std::size_t size() const noexcept { return map_.size(); }

  TermSum take();

 private:
  struct Hash {
    std::size_t operator()(const std::vector<AtomPower>& v) const noexcept;
  };
  std::unordered_map<std::vector<AtomPower>, Fraction, Hash> map_;
  std::vector<AtomPower> scratch_;
};

/// Canonical sum of factored terms: sorted by atom list, like terms merged,
/// zero coefficients dropped. Syntactic identity of canonical forms implies
/// equality as functions; the converse needs `equals`.
class TermSum {
 public:
  TermSum() = default;  // zero
  TermSum(FactoredTerm term);  // NOLINT: a monomial is a sum
  static TermSum constant(Fraction c) { return TermSum(FactoredTerm(c)); }
  static TermSum one() { return constant(Fraction{1}); }

  std::span<const FactoredTerm> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Number of atom factors summed over all terms.
  std::size_t atom_count() const noexcept;

  TermSum operator-() const;
  TermSum& operator+=(const TermSum& rhs);
  TermSum& operator-=(const TermSum& rhs);
  TermSum& operator*=(const TermSum& rhs);
  TermSum& operator*=(const FactoredTerm& rhs);
  friend TermSum operator+(TermSum a, const TermSum& b) { return a += b; }
  friend TermSum operator-(TermSum a, const TermSum& b) { return a -= b; }
  friend TermSum operator*(const TermSum& a, const TermSum& b);
  friend TermSum operator*(TermSum a, const FactoredTerm& b) { return a *= b; }

  /// u -> u + s, i.e. x -> q^s x.
  TermSum shifted(int s) const;

  friend bool operator==(const TermSum&, const TermSum&) = default;

  std::string to_string() const;

 private:
  friend class TermAccumulator;
  std::vector<FactoredTerm> terms_;
};

inline TermSum shift_u(const TermSum& f, int s) { return f.shifted(s); }

/// u -> k - u (x -> q^k / x). Each bracket turns into minus a bracket in u.
TermSum reflect(const TermSum& f, int k);
/// u_p -> -u_p for every non-origin parameter (y_p -> 1/y_p).
TermSum negate_parameters(const TermSum& f);

/// Numeric values for q and every parameter slot. Slot 0 is fixed to 1;
/// params[i] is y for slot i + 1.
template <class F>
class Valuation {
 public:
  Valuation(F q, std::vector<F> params);

  const F& q() const noexcept { return q_; }
  const F& kappa() const noexcept { return kappa_; }
  const F& param(std::uint32_t slot) const;
  std::size_t num_params() const noexcept { return params_.size(); }

  F q_power(int k) const;
  F multiplier(AtomKey atom) const;
  F bracket(AtomKey atom, const F& x) const;

 private:
  F q_;
  F kappa_;
  std::vector<F> params_;
  std::vector<F> inv_params_;
  std::vector<F> q_powers_;  // q^k for |k| <= kPowerCache
  static constexpr int kPowerCache = 64;
};

extern template class Valuation<BigRational>;
extern template class Valuation<Complex>;

template <class F>
F eval(const FactoredTerm& t, const F& x, const Valuation<F>& val);
template <class F>
F eval(const TermSum& f, const F& x, const Valuation<F>& val);

/// Outcome of an exact zero test.
struct ZeroCertificate {
  bool zero = false;
  bool syntactic = false;    // canonical form was already empty
  int points_required = 0;   // degree bound + 1 of the cleared numerator
  int points_evaluated = 0;
};

/// Certifies f == 0 as a rational function of x. The canonical form is
/// checked first; otherwise the numerator over the common denominator
/// prod (m_a^2 x^2 - 1)^{E_a} is a Laurent polynomial whose exponent span is
/// bounded from the atom exponents, and it is tested at span + 1 exact
/// non-pole points.
ZeroCertificate certify_zero(const TermSum& f, const Valuation<BigRational>& val);

bool equals(const TermSum& f, const TermSum& g, const Valuation<BigRational>& val);
/// Always throws Errc::inexact_field; use approx_equals for floats.
bool equals(const TermSum& f, const TermSum& g, const Valuation<Complex>& val);
bool approx_equals(const TermSum& f, const TermSum& g, const Valuation<Complex>& val,
                   double rel_tol, std::uint64_t seed = 1);

/// Residue in x at x0, valid when every term has at most a simple pole
/// there. The residue in u is this value times 1/(x0 ln q).
template <class F>
F residue_at(const TermSum& f, const F& x0, const Valuation<F>& val,
             double vanish_tol = 1e-9);

/// Per-term residues, for callers that measure cancellation quality.
template <class F>
std::vector<F> term_residues(const TermSum& f, const F& x0, const Valuation<F>& val,
                             double vanish_tol = 1e-9);

/// Limit x -> infinity of a term of total degree zero; degree < 0 gives 0.
template <class F>
F limit_at_infinity(const FactoredTerm& t, const Valuation<F>& val);

/// Checks that no two parameter slots (or a slot and the origin) are related
/// by y_a = +-q^k y_b for |k| <= max_shift.
bool parameters_generic(const Valuation<BigRational>& val, int max_shift);

std::string to_string(const BigRational& v);
std::string to_string(const Complex& v);

}  // namespace superbethe
