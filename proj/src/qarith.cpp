#include "superbethe/qarith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>

namespace superbethe {
namespace {

bool atoms_less(std::span<const AtomPower> a, std::span<const AtomPower> b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(), [](const AtomPower& l, const AtomPower& r) {
        if (l.atom != r.atom) return l.atom < r.atom;
        return l.exp < r.exp;
      });
}

int compare_atoms(std::span<const AtomPower> a, std::span<const AtomPower> b) {
  if (atoms_less(a, b)) return -1;
  if (atoms_less(b, a)) return 1;
  return 0;
}

// Merges two sorted atom lists into out, dropping cancelled exponents.
void merge_atoms(std::span<const AtomPower> a, std::span<const AtomPower> b,
                 std::vector<AtomPower>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].atom < b[j].atom)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].atom < a[i].atom) {
      out.push_back(b[j++]);
    } else {
      const int e = a[i].exp + b[j].exp;
      if (e != 0) out.push_back({a[i].atom, e});
      ++i;
      ++j;
    }
  }
}

void canonicalize_atoms(std::vector<AtomPower>& atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const AtomPower& l, const AtomPower& r) { return l.atom < r.atom; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < atoms.size();) {
    AtomPower acc = atoms[i++];
    while (i < atoms.size() && atoms[i].atom == acc.atom) acc.exp += atoms[i++].exp;
    if (acc.exp != 0) atoms[w++] = acc;
  }
  atoms.resize(w);
}

template <class F>
F from_fraction(const Fraction& c);

template <>
BigRational from_fraction<BigRational>(const Fraction& c) {
  BigRational r;
  mpq_set_si(r.get_mpq_t(), c.num(), static_cast<unsigned long>(c.den()));
  return r;
}

template <>
Complex from_fraction<Complex>(const Fraction& c) {
  return Complex(static_cast<double>(c.num()) / static_cast<double>(c.den()), 0.0);
}

bool is_zero(const BigRational& v) { return sgn(v) == 0; }
bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }

template <class F>
F one() {
  return F(1);
}

template <class F>
F ipow(F base, int e) {
  if (e < 0) {
    base = one<F>() / base;
    e = -e;
  }
  F result = one<F>();
  while (e > 0) {
    if ((e & 1) != 0) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

double magnitude(const Complex& v) { return std::abs(v); }

bool vanishes(const BigRational& mx, double /*tol*/) { return mx * mx == 1; }
bool vanishes(const Complex& mx, double tol) { return std::abs(mx * mx - 1.0) <= tol; }

// Atom values at one point, computed once per distinct atom.
template <class F>
class AtomValues {
 public:
  AtomValues(const Valuation<F>& val, const F& x) : val_(val), x_(x) {}
  const F& get(AtomKey a) {
    auto it = cache_.find(a.raw());
    if (it != cache_.end()) return it->second;
    return cache_.emplace(a.raw(), val_.bracket(a, x_)).first->second;
  }

 private:
  const Valuation<F>& val_;
  const F& x_;
  std::unordered_map<std::uint64_t, F> cache_;
};

template <class F>
F eval_term(const FactoredTerm& t, AtomValues<F>& values) {
  F acc = from_fraction<F>(t.coeff());
  for (const AtomPower& ap : t.atoms()) {
    const F& v = values.get(ap.atom);
    if (ap.exp < 0 && is_zero(v)) {
      throw Error(Errc::pole_at_evaluation_point,
                  "denominator " + ap.atom.to_string() + " vanishes at the evaluation point");
    }
    acc *= ipow(v, ap.exp);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- AtomKey

AtomKey AtomKey::make(std::uint32_t param, int sign, int shift) {
  if (sign != 1 && sign != -1) throw Error(Errc::invalid_argument, "atom sign must be +1 or -1");
  if (param == kOrigin) sign = 1;
  if (param >= (1U << 30)) throw Error(Errc::invalid_argument, "parameter slot out of range");
  AtomKey k;
  k.bits_ = (static_cast<std::uint64_t>(param) << 33) |
            (sign < 0 ? (std::uint64_t{1} << 32) : 0) |
            static_cast<std::uint64_t>(static_cast<std::int64_t>(shift) + kBias);
  return k;
}

std::string AtomKey::to_string() const {
  std::string s = "[u";
  if (shift() != 0) s += (shift() > 0 ? "+" : "") + std::to_string(shift());
  if (param() != kOrigin) s += std::string(sign() > 0 ? "-" : "+") + "v" + std::to_string(param());
  return s + "]";
}

// ----------------------------------------------------------- FactoredTerm

FactoredTerm::FactoredTerm(Fraction coeff, std::vector<AtomPower> atoms)
    : coeff_(coeff), atoms_(std::move(atoms)) {
  canonicalize_atoms(atoms_);
}

FactoredTerm FactoredTerm::bracket(AtomKey atom, int exp) {
  FactoredTerm t;
  if (exp != 0) t.atoms_.push_back({atom, exp});
  return t;
}

int FactoredTerm::degree() const noexcept {
  int d = 0;
  for (const AtomPower& ap : atoms_) d += ap.exp;
  return d;
}

int FactoredTerm::exponent_of(AtomKey atom) const noexcept {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom,
                             [](const AtomPower& ap, AtomKey k) { return ap.atom < k; });
  return (it != atoms_.end() && it->atom == atom) ? it->exp : 0;
}

FactoredTerm FactoredTerm::inverse() const {
  if (coeff_.is_zero()) throw Error(Errc::invalid_argument, "inverse of a zero term");
  FactoredTerm t;
  t.coeff_ = Fraction{1} / coeff_;
  t.atoms_ = atoms_;
  for (AtomPower& ap : t.atoms_) ap.exp = -ap.exp;
  return t;
}

FactoredTerm FactoredTerm::shifted(int s) const {
  FactoredTerm t = *this;
  for (AtomPower& ap : t.atoms_) ap.atom = ap.atom.shifted(s);
  return t;
}

FactoredTerm FactoredTerm::with_coeff(Fraction c) const {
  FactoredTerm t = *this;
  t.coeff_ = c;
  return t;
}

FactoredTerm& FactoredTerm::operator*=(const FactoredTerm& rhs) {
  coeff_ *= rhs.coeff_;
  std::vector<AtomPower> out;
  merge_atoms(atoms_, rhs.atoms_, out);
  atoms_ = std::move(out);
  return *this;
}

std::string FactoredTerm::to_string() const {
  std::string s = coeff_.to_string();
  for (const AtomPower& ap : atoms_) {
    s += "*" + ap.atom.to_string();
    if (ap.exp != 1) s += "^" + std::to_string(ap.exp);
  }
  return s;
}

// -------------------------------------------------------- TermAccumulator

std::size_t TermAccumulator::Hash::operator()(const std::vector<AtomPower>& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (const AtomPower& ap : v) {
    std::uint64_t z = ap.atom.raw() * 0xbf58476d1ce4e5b9ULL + static_cast<std::uint64_t>(ap.exp);
    z ^= z >> 31;
    h = (h ^ z) * 0x94d049bb133111ebULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

void TermAccumulator::add(const Fraction& coeff, std::span<const AtomPower> atoms) {
  if (coeff.is_zero()) return;
  scratch_.assign(atoms.begin(), atoms.end());
  auto it = map_.find(scratch_);
  if (it != map_.end()) {
    it->second += coeff;
  } else {
    map_.emplace(scratch_, coeff);
  }
}

void TermAccumulator::add(const TermSum& sum, const Fraction& scale) {
  for (const FactoredTerm& t : sum.terms()) add(t.coeff() * scale, t.atoms());
}

void TermAccumulator::add_product(const Fraction& coeff, std::span<const AtomPower> a,
                                  std::span<const AtomPower> b) {
  if (coeff.is_zero()) return;
  merge_atoms(a, b, scratch_);
  auto it = map_.find(scratch_);
  if (it != map_.end()) {
    it->second += coeff;
  } else {
    map_.emplace(scratch_, coeff);
  }
}

TermSum TermAccumulator::take() {
  TermSum out;
  out.terms_.reserve(map_.size());
  for (auto& [atoms, coeff] : map_) {
    if (coeff.is_zero()) continue;
    FactoredTerm t;
    t.coeff_ = coeff;
    t.atoms_ = atoms;
    out.terms_.push_back(std::move(t));
  }
  map_.clear();
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const FactoredTerm& l, const FactoredTerm& r) {
              return atoms_less(l.atoms(), r.atoms());
            });
  return out;
}

// ---------------------------------------------------------------- TermSum

TermSum::TermSum(FactoredTerm term) {
  if (!term.coeff().is_zero()) terms_.push_back(std::move(term));
}

std::size_t TermSum::atom_count() const noexcept {
  std::size_t n = 0;
  for (const FactoredTerm& t : terms_) {
    for (const AtomPower& ap : t.atoms()) n += static_cast<std::size_t>(std::abs(ap.exp));
  }
  return n;
}

TermSum TermSum::operator-() const {
  TermSum r = *this;
  for (FactoredTerm& t : r.terms_) t = t.with_coeff(-t.coeff());
  return r;
}

TermSum& TermSum::operator+=(const TermSum& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  std::vector<FactoredTerm> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    const int c = i == terms_.size()       ? 1
                  : j == rhs.terms_.size() ? -1
                                           : compare_atoms(terms_[i].atoms(), rhs.terms_[j].atoms());
    if (c < 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c > 0) {
      out.push_back(rhs.terms_[j++]);
    } else {
      const Fraction sum = terms_[i].coeff() + rhs.terms_[j].coeff();
      if (!sum.is_zero()) out.push_back(terms_[i].with_coeff(sum));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

TermSum& TermSum::operator-=(const TermSum& rhs) { return *this += -rhs; }

TermSum operator*(const TermSum& a, const TermSum& b) {
  if (a.is_zero() || b.is_zero()) return {};
  TermAccumulator acc;
  for (const FactoredTerm& ta : a.terms()) {
    for (const FactoredTerm& tb : b.terms()) {
      acc.add_product(ta.coeff() * tb.coeff(), ta.atoms(), tb.atoms());
    }
  }
  return acc.take();
}

TermSum& TermSum::operator*=(const TermSum& rhs) { return *this = *this * rhs; }

TermSum& TermSum::operator*=(const FactoredTerm& rhs) {
  if (rhs.coeff().is_zero()) {
    terms_.clear();
    return *this;
  }
  for (FactoredTerm& t : terms_) t *= rhs;
  std::sort(terms_.begin(), terms_.end(), [](const FactoredTerm& l, const FactoredTerm& r) {
    return atoms_less(l.atoms(), r.atoms());
  });
  return *this;
}

TermSum TermSum::shifted(int s) const {
  TermSum r;
  r.terms_.reserve(terms_.size());
  for (const FactoredTerm& t : terms_) r.terms_.push_back(t.shifted(s));
  return r;
}

std::string TermSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) s += " + ";
    s += terms_[i].to_string();
  }
  return s;
}

namespace {

template <class Map>
TermSum map_atoms(const TermSum& f, Map&& map) {
  TermAccumulator acc;
  std::vector<AtomPower> atoms;
  for (const FactoredTerm& t : f.terms()) {
    Fraction c = t.coeff();
    atoms.clear();
    for (const AtomPower& ap : t.atoms()) {
      auto [key, flip] = map(ap.atom);
      if (flip && (ap.exp % 2) != 0) c = -c;
      atoms.push_back({key, ap.exp});
    }
    canonicalize_atoms(atoms);
    acc.add(c, atoms);
  }
  return acc.take();
}

}  // namespace

TermSum reflect(const TermSum& f, int k) {
  return map_atoms(f, [k](AtomKey a) {
    return std::pair{AtomKey::make(a.param(), -a.sign(), -k - a.shift()), true};
  });
}

TermSum negate_parameters(const TermSum& f) {
  return map_atoms(f, [](AtomKey a) {
    return std::pair{AtomKey::make(a.param(), -a.sign(), a.shift()), false};
  });
}

// -------------------------------------------------------------- Valuation

template <class F>
Valuation<F>::Valuation(F q, std::vector<F> params) : q_(std::move(q)) {
  if (is_zero(q_) || q_ == one<F>() || q_ == -one<F>()) {
    throw Error(Errc::invalid_argument, "q must not be 0, 1 or -1");
  }
  kappa_ = q_ - one<F>() / q_;
  params_.reserve(params.size() + 1);
  params_.push_back(one<F>());
  for (F& p : params) {
    if (is_zero(p)) throw Error(Errc::invalid_argument, "parameter value must be nonzero");
    params_.push_back(std::move(p));
  }
  inv_params_.reserve(params_.size());
  for (const F& p : params_) inv_params_.push_back(one<F>() / p);
  q_powers_.resize(2 * kPowerCache + 1);
  q_powers_[kPowerCache] = one<F>();
  const F qinv = one<F>() / q_;
  for (int k = 1; k <= kPowerCache; ++k) {
    q_powers_[kPowerCache + k] = q_powers_[kPowerCache + k - 1] * q_;
    q_powers_[kPowerCache - k] = q_powers_[kPowerCache - k + 1] * qinv;
  }
}

template <class F>
const F& Valuation<F>::param(std::uint32_t slot) const {
  if (slot >= params_.size()) throw Error(Errc::invalid_argument, "parameter slot has no value");
  return params_[slot];
}

template <class F>
F Valuation<F>::q_power(int k) const {
  if (k >= -kPowerCache && k <= kPowerCache) return q_powers_[kPowerCache + k];
  return ipow(q_, k);
}

template <class F>
F Valuation<F>::multiplier(AtomKey atom) const {
  const std::uint32_t p = atom.param();
  if (p >= params_.size()) throw Error(Errc::invalid_argument, "parameter slot has no value");
  F m = q_power(atom.shift());
  if (p != AtomKey::kOrigin) m *= atom.sign() > 0 ? inv_params_[p] : params_[p];
  return m;
}

template <class F>
F Valuation<F>::bracket(AtomKey atom, const F& x) const {
  const F mx = multiplier(atom) * x;
  if (is_zero(mx)) throw Error(Errc::invalid_argument, "evaluation at x = 0");
  return (mx - one<F>() / mx) / kappa_;
}

template class Valuation<BigRational>;
template class Valuation<Complex>;

// ------------------------------------------------------------- evaluation

template <class F>
F eval(const FactoredTerm& t, const F& x, const Valuation<F>& val) {
  AtomValues<F> values(val, x);
  return eval_term(t, values);
}

template <class F>
F eval(const TermSum& f, const F& x, const Valuation<F>& val) {
  AtomValues<F> values(val, x);
  F acc = F(0);
  for (const FactoredTerm& t : f.terms()) acc += eval_term(t, values);
  return acc;
}

template BigRational eval(const FactoredTerm&, const BigRational&, const Valuation<BigRational>&);
template Complex eval(const FactoredTerm&, const Complex&, const Valuation<Complex>&);
template BigRational eval(const TermSum&, const BigRational&, const Valuation<BigRational>&);
template Complex eval(const TermSum&, const Complex&, const Valuation<Complex>&);

ZeroCertificate certify_zero(const TermSum& f, const Valuation<BigRational>& val) {
  ZeroCertificate cert;
  if (f.is_zero()) {
    cert.zero = true;
    cert.syntactic = true;
    return cert;
  }
  // E_a: largest denominator exponent of each atom over all terms.
  std::map<AtomKey, int> denom;
  for (const FactoredTerm& t : f.terms()) {
    for (const AtomPower& ap : t.atoms()) {
      if (ap.exp < 0) {
        int& e = denom[ap.atom];
        e = std::max(e, -ap.exp);
      }
    }
  }
  long total_e = 0;
  for (const auto& [a, e] : denom) total_e += e;
  long lo = 0;
  long hi = 0;
  bool first = true;
  for (const FactoredTerm& t : f.terms()) {
    const long d = t.degree();
    const long tlo = -d;
    const long thi = d + 2 * total_e;
    lo = first ? tlo : std::min(lo, tlo);
    hi = first ? thi : std::max(hi, thi);
    first = false;
  }
  cert.points_required = static_cast<int>(hi - lo + 1);

  std::vector<BigRational> denom_mult;
  denom_mult.reserve(denom.size());
  for (const auto& [a, e] : denom) denom_mult.push_back(val.multiplier(a));

  // Points (k + 3)/(k + 2): distinct, nonzero, small height.
  for (long k = 0; cert.points_evaluated < cert.points_required; ++k) {
    const BigRational x = BigRational(k + 3) / BigRational(k + 2);
    bool pole = false;
    for (const BigRational& m : denom_mult) {
      const BigRational mx = m * x;
      if (mx * mx == 1) {
        pole = true;
        break;
      }
    }
    if (pole) continue;
    const BigRational v = eval(f, x, val);
    ++cert.points_evaluated;
    if (sgn(v) != 0) {
      cert.zero = false;
      return cert;
    }
  }
  cert.zero = true;
  return cert;
}

bool equals(const TermSum& f, const TermSum& g, const Valuation<BigRational>& val) {
  return certify_zero(f - g, val).zero;
}

bool equals(const TermSum&, const TermSum&, const Valuation<Complex>&) {
  throw Error(Errc::inexact_field, "certified equality needs the exact field; use approx_equals");
}

bool approx_equals(const TermSum& f, const TermSum& g, const Valuation<Complex>& val,
                   double rel_tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const TermSum d = f - g;
  if (d.is_zero()) return true;
  int tested = 0;
  for (int attempt = 0; tested < 8 && attempt < 64; ++attempt) {
    const double radius = 0.5 + 1.5 * unit();
    const double angle = 6.283185307179586 * unit();
    const Complex x = std::polar(radius, angle);
    try {
      const double scale =
          std::max({1.0, magnitude(eval(f, x, val)), magnitude(eval(g, x, val))});
      if (magnitude(eval(d, x, val)) > rel_tol * scale) return false;
      ++tested;
    } catch (const Error& e) {
      if (e.code() != Errc::pole_at_evaluation_point) throw;
    }
  }
  return tested > 0;
}

// -------------------------------------------------------------- residues

template <class F>
std::vector<F> term_residues(const TermSum& f, const F& x0, const Valuation<F>& val,
                             double vanish_tol) {
  std::vector<F> out;
  out.reserve(f.size());
  for (const FactoredTerm& t : f.terms()) {
    F regular = from_fraction<F>(t.coeff());
    int order = 0;
    for (const AtomPower& ap : t.atoms()) {
      const F m = val.multiplier(ap.atom);
      const F mx = m * x0;
      if (vanishes(mx, vanish_tol)) {
        order += ap.exp;
        regular *= ipow<F>(F(2) * m / val.kappa(), ap.exp);
      } else {
        regular *= ipow<F>((mx - one<F>() / mx) / val.kappa(), ap.exp);
      }
    }
    if (order <= -2) {
      throw Error(Errc::higher_order_pole, "term " + t.to_string() + " has a pole of order " +
                                               std::to_string(-order));
    }
    out.push_back(order == -1 ? regular : F(0));
  }
  return out;
}

template <class F>
F residue_at(const TermSum& f, const F& x0, const Valuation<F>& val, double vanish_tol) {
  F acc = F(0);
  for (const F& r : term_residues(f, x0, val, vanish_tol)) acc += r;
  return acc;
}

template std::vector<BigRational> term_residues(const TermSum&, const BigRational&,
                                                const Valuation<BigRational>&, double);
template std::vector<Complex> term_residues(const TermSum&, const Complex&,
                                            const Valuation<Complex>&, double);
template BigRational residue_at(const TermSum&, const BigRational&, const Valuation<BigRational>&,
                                double);
template Complex residue_at(const TermSum&, const Complex&, const Valuation<Complex>&, double);

template <class F>
F limit_at_infinity(const FactoredTerm& t, const Valuation<F>& val) {
  const int d = t.degree();
  if (d > 0) throw Error(Errc::divergent_limit, "term of positive degree diverges as x -> inf");
  if (d < 0) return F(0);
  F acc = from_fraction<F>(t.coeff());
  for (const AtomPower& ap : t.atoms()) acc *= ipow<F>(val.multiplier(ap.atom) / val.kappa(), ap.exp);
  return acc;
}

template BigRational limit_at_infinity(const FactoredTerm&, const Valuation<BigRational>&);
template Complex limit_at_infinity(const FactoredTerm&, const Valuation<Complex>&);

bool parameters_generic(const Valuation<BigRational>& val, int max_shift) {
  const std::size_t n = val.num_params();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const BigRational ratio = val.param(static_cast<std::uint32_t>(a)) /
                                val.param(static_cast<std::uint32_t>(b));
      const BigRational product = val.param(static_cast<std::uint32_t>(a)) *
                                  val.param(static_cast<std::uint32_t>(b));
      for (int k = -max_shift; k <= max_shift; ++k) {
        const BigRational qk = val.q_power(k);
        if (a != b && (ratio == qk || ratio == -qk)) return false;
        if (b != 0 && (product == qk || product == -qk)) return false;
      }
    }
  }
  return true;
}

std::string to_string(const BigRational& v) { return v.get_str(); }

std::string to_string(const Complex& v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
  return buf;
}

}  // namespace superbethe
