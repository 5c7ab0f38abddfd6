#include "superbethe/bae.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "superbethe/rng.hpp"

namespace superbethe {

namespace {

double magnitude(const BigRational& v) { return std::abs(v.get_d()); }
double magnitude(const Complex& v) { return std::abs(v); }

// The four cross-multiplied pieces of the equation for color a.
struct BaeSides {
  FactoredTerm p_num;  // P_a(u + 1/t_a)
  FactoredTerm p_den;  // P_a(u - 1/t_a)
  FactoredTerm q_num;  // prod_b Q_b(u + (a|b))
  FactoredTerm q_den;  // prod_b Q_b(u - (a|b))
  int sigma = 1;       // (-1)^{deg alpha_a}
};

BaeSides sides(const RootSystemConfig& cfg, const ParamLayout& layout, int a) {
  if (a < 1 || a > cfg.colors()) throw Error(Errc::invalid_argument, "color out of range");
  BaeSides s;
  if (a == cfg.vacuum_color) {
    const int t = cfg.t_signs[static_cast<std::size_t>(a - 1)];
    s.p_num = p_factor(layout, t);
    s.p_den = p_factor(layout, -t);
  }
  for (int b = 1; b <= cfg.colors(); ++b) {
    const int c = cfg.cartan[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    if (c == 0) continue;
    s.q_num *= q_factor(layout, b, c);
    s.q_den *= q_factor(layout, b, -c);
  }
  s.sigma = cfg.degrees[static_cast<std::size_t>(a - 1)] % 2 == 0 ? 1 : -1;
  return s;
}

template <class F>
F eval_term(const FactoredTerm& t, const F& x, const Valuation<F>& val) {
  return eval(TermSum(t), x, val);
}

template <class F>
const F& root_value(const BetheRootSet<F>& rs, int a, int k) {
  if (k < 1 || k > rs.layout.count(a)) throw Error(Errc::invalid_argument, "root index out of range");
  return rs.roots.at(static_cast<std::size_t>(a - 1)).at(static_cast<std::size_t>(k - 1));
}

Complex canonical_sign(Complex y) {
  const double lead = std::abs(y.real()) >= std::abs(y.imag()) ? y.real() : y.imag();
  return lead < 0 ? -y : y;
}

// y_i / y_j = +-q^k with |k| <= max_shift, within relative tolerance
bool related(const Complex& yi, const Complex& yj, const Complex& q, int max_shift, double tol) {
  const Complex ratio = yi / yj;
  Complex qk = std::pow(q, -max_shift);
  for (int k = -max_shift; k <= max_shift; ++k) {
    if (std::abs(ratio - qk) <= tol * std::abs(qk) || std::abs(ratio + qk) <= tol * std::abs(qk)) {
      return true;
    }
    qk *= q;
  }
  return false;
}

// No root sits on a site, on the origin or on another root up to q-shifts.
bool roots_generic(const BetheRootSet<Complex>& rs, int max_shift, double tol) {
  std::vector<Complex> fixed;
  fixed.emplace_back(1.0, 0.0);
  if (!rs.layout.homogeneous()) fixed.insert(fixed.end(), rs.w.begin(), rs.w.end());
  std::vector<std::pair<int, Complex>> all;
  for (int a = 1; a <= rs.layout.colors(); ++a) {
    for (const Complex& y : rs.roots[static_cast<std::size_t>(a - 1)]) {
      if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) return false;
      if (std::abs(y) < 1e-8 || std::abs(y) > 1e8) return false;
      all.emplace_back(a, y);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].first == 1) {
      for (const Complex& f : fixed) {
        if (related(all[i].second, f, rs.q, 1, tol)) return false;
      }
    }
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const int shift = all[i].first == all[j].first ? 0 : max_shift;
      if (related(all[i].second, all[j].second, rs.q, shift, tol)) return false;
    }
  }
  return true;
}

}  // namespace

template <class F>
double BaeResidual<F>::relative() const {
  if (scale == 0.0) return magnitude(value) == 0.0 ? 0.0 : INFINITY;
  return magnitude(value) / scale;
}

template <class F>
BaeResidual<F> bae_residual(const RootSystemConfig& cfg, int a, int k, const BetheRootSet<F>& rs) {
  const F& x0 = root_value(rs, a, k);
  const Valuation<F> val = rs.valuation();
  const BaeSides s = sides(cfg, rs.layout, a);
  const F pn = eval_term(s.p_num, x0, val);
  const F pd = eval_term(s.p_den, x0, val);
  const F qn = eval_term(s.q_num, x0, val);
  const F qd = eval_term(s.q_den, x0, val);
  if constexpr (std::is_same_v<F, BigRational>) {
    if (pd * qd == 0) {
      throw Error(Errc::degenerate_denominator, "a denominator of the Bethe equation vanishes at the root");
    }
  }
  const F left = pn * qd;
  const F right = qn * pd;
  BaeResidual<F> r;
  r.value = s.sigma > 0 ? F(left + right) : F(left - right);
  r.scale = std::max(magnitude(left), magnitude(right));
  return r;
}

template struct BaeResidual<BigRational>;
template struct BaeResidual<Complex>;
template BaeResidual<BigRational> bae_residual(const RootSystemConfig&, int, int,
                                               const BetheRootSet<BigRational>&);
template BaeResidual<Complex> bae_residual(const RootSystemConfig&, int, int,
                                           const BetheRootSet<Complex>&);

double max_bae_residual(const RootSystemConfig& cfg, const BetheRootSet<Complex>& rs) {
  double worst = 0.0;
  for (int a = 1; a <= rs.layout.colors(); ++a) {
    for (int k = 1; k <= rs.layout.count(a); ++k) {
      worst = std::max(worst, bae_residual(cfg, a, k, rs).relative());
    }
  }
  return worst;
}

// ------------------------------------------------------- single-root solve

namespace {

using Poly = std::vector<Complex>;  // ascending coefficients

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Complex{});
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Complex poly_eval(const Poly& p, Complex z) {
  Complex v{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * z + *it;
  return v;
}

Complex poly_deriv(const Poly& p, Complex z) {
  Complex v{};
  for (std::size_t i = p.size() - 1; i >= 1; --i) v = v * z + static_cast<double>(i) * p[i];
  return v;
}

// kappa * y * [u_k + c - u_p] = alpha z - 1/alpha with z = y^2, alpha = m(atom);
// a bracket against the unknown's own slot is the constant [c].
Poly side_polynomial(const FactoredTerm& t, std::uint32_t slot, const Valuation<Complex>& val) {
  Poly p{Complex(t.coeff().num(), 0.0) / static_cast<double>(t.coeff().den())};
  for (const AtomPower& ap : t.atoms()) {
    Poly f;
    if (ap.atom.param() == slot) {
      f = {val.bracket(AtomKey::make(AtomKey::kOrigin, 1, ap.atom.shift()), Complex(1.0, 0.0))};
    } else {
      const Complex alpha = val.multiplier(ap.atom);
      f = {-1.0 / alpha / val.kappa(), alpha / val.kappa()};
    }
    for (int e = 0; e < ap.exp; ++e) p = poly_mul(p, f);
  }
  return p;
}

}  // namespace

std::vector<BetheRootSet<Complex>> enforce_single_root(const RootSystemConfig& cfg, int a, int k,
                                                       const BetheRootSet<Complex>& tmpl) {
  if (k < 1 || k > tmpl.layout.count(a)) {
    throw Error(Errc::no_finite_root, "no unknown root for color " + std::to_string(a));
  }
  const std::uint32_t slot = tmpl.layout.root_slot(a, k);
  const Valuation<Complex> val = tmpl.valuation();
  const BaeSides s = sides(cfg, tmpl.layout, a);
  Poly left = poly_mul(side_polynomial(s.p_num, slot, val), side_polynomial(s.q_den, slot, val));
  Poly right = poly_mul(side_polynomial(s.q_num, slot, val), side_polynomial(s.p_den, slot, val));
  const std::size_t n = std::max(left.size(), right.size());
  left.resize(n);
  right.resize(n);
  Poly p(n);
  double big = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = left[i] + static_cast<double>(s.sigma) * right[i];
    big = std::max(big, std::abs(p[i]));
  }
  while (!p.empty() && std::abs(p.back()) <= 1e-13 * big) p.pop_back();
  if (p.size() < 2) throw Error(Errc::no_finite_root, "the single-root equation has no finite root");

  const int deg = static_cast<int>(p.size()) - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -p[static_cast<std::size_t>(i)] / p.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) throw Error(Errc::no_finite_root, "companion eigenvalues failed");

  std::vector<BetheRootSet<Complex>> out;
  for (int i = 0; i < deg; ++i) {
    Complex z = es.eigenvalues()[i];
    for (int it = 0; it < 20; ++it) {
      const Complex d = poly_deriv(p, z);
      if (std::abs(d) == 0.0) break;
      const Complex step = poly_eval(p, z) / d;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::abs(z)) break;
    }
    if (std::abs(z) < 1e-12) continue;
    for (const Complex y : {std::sqrt(z), -std::sqrt(z)}) {
      BetheRootSet<Complex> rs = tmpl;
      rs.random_draw = false;
      rs.roots[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(k - 1)] = y;
      if (!roots_generic(rs, 4, 1e-9)) continue;
      if (bae_residual(cfg, a, k, rs).relative() >= 1e-12) continue;
      out.push_back(std::move(rs));
    }
  }
  if (out.empty()) throw Error(Errc::no_finite_root, "no admissible root of the single equation");
  return out;
}

// --------------------------------------------------------------- audit

PoleAudit pole_audit(const RootSystemConfig& cfg, int a_max, const BetheRootSet<Complex>& rs, int b,
                     int k) {
  PoleAudit audit;
  audit.color = b;
  audit.index = k;
  const std::uint32_t slot = rs.layout.root_slot(b, k);
  const Valuation<Complex> val = rs.valuation();
  for (int a = 1; a <= a_max; ++a) {
    const TermSum t = t_skew(cfg, rs.layout, SkewShape(Partition(std::vector<int>(static_cast<std::size_t>(a), 1))));
    std::set<AtomKey> poles;
    for (const auto& term : t.terms()) {
      for (const auto& ap : term.atoms()) {
        if (ap.exp < 0 && ap.atom.param() == slot) poles.insert(ap.atom);
      }
    }
    for (const AtomKey atom : poles) {
      for (int branch : {1, -1}) {
        const Complex x0 = static_cast<double>(branch) / val.multiplier(atom);
        const std::vector<Complex> res = term_residues(t, x0, val);
        PoleAuditEntry e;
        e.a = a;
        e.shift = atom.shift();
        e.branch = branch;
        Complex total{};
        for (const Complex& v : res) {
          total += v;
          e.max_term = std::max(e.max_term, std::abs(v));
        }
        e.sum_abs = std::abs(total);
        e.relative = e.max_term > 0 ? e.sum_abs / e.max_term : 0.0;
        audit.max_relative = std::max(audit.max_relative, e.relative);
        audit.entries.push_back(e);
      }
    }
  }
  return audit;
}

// ---------------------------------------------------------------- solver

namespace {

struct Unknown {
  int a;
  int k;
};

std::vector<Unknown> unknowns_of(const ParamLayout& layout) {
  std::vector<Unknown> u;
  for (int a = 1; a <= layout.colors(); ++a) {
    for (int k = 1; k <= layout.count(a); ++k) u.push_back({a, k});
  }
  return u;
}

Complex& slot_of(BetheRootSet<Complex>& rs, const Unknown& u) {
  return rs.roots[static_cast<std::size_t>(u.a - 1)][static_cast<std::size_t>(u.k - 1)];
}

Eigen::VectorXcd residual_vector(const RootSystemConfig& cfg, const BetheRootSet<Complex>& rs,
                                 const std::vector<Unknown>& us, const Eigen::VectorXd& scale) {
  Eigen::VectorXcd r(static_cast<Eigen::Index>(us.size()));
  for (std::size_t i = 0; i < us.size(); ++i) {
    r[static_cast<Eigen::Index>(i)] = bae_residual(cfg, us[i].a, us[i].k, rs).value / scale[static_cast<Eigen::Index>(i)];
  }
  return r;
}

// Sort each color and fix the global sign of every root so that equivalent
// solutions compare equal.
BetheRootSet<Complex> canonical(BetheRootSet<Complex> rs) {
  for (auto& col : rs.roots) {
    for (auto& y : col) y = canonical_sign(y);
    std::sort(col.begin(), col.end(), [](const Complex& x, const Complex& y) {
      if (x.real() != y.real()) return x.real() < y.real();
      return x.imag() < y.imag();
    });
  }
  return rs;
}

bool same_solution(const BetheRootSet<Complex>& x, const BetheRootSet<Complex>& y, double tol) {
  auto close = [tol](Complex u, Complex v) {
    const double m = std::max(std::abs(u), std::abs(v));
    return std::abs(u - v) <= tol * m || std::abs(u + v) <= tol * m;
  };
  for (std::size_t a = 0; a < x.roots.size(); ++a) {
    std::vector<bool> used(y.roots[a].size(), false);
    for (const Complex& u : x.roots[a]) {
      bool hit = false;
      for (std::size_t k = 0; k < y.roots[a].size() && !hit; ++k) {
        if (!used[k] && close(u, y.roots[a][k])) used[k] = hit = true;
      }
      if (!hit) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<BetheRootSet<Complex>> solve_full(const RootSystemConfig& cfg,
                                              const BetheRootSet<Complex>& tmpl, std::uint64_t seed,
                                              const SolveOptions& opt) {
  const std::vector<Unknown> us = unknowns_of(tmpl.layout);
  std::vector<BetheRootSet<Complex>> found;
  if (us.empty()) {
    BetheRootSet<Complex> rs = tmpl;
    rs.random_draw = false;
    found.push_back(rs);
    return found;
  }
  Rng rng(seed);
  const auto n = static_cast<Eigen::Index>(us.size());
  for (int start = 0; start < opt.starts; ++start) {
    BetheRootSet<Complex> rs = tmpl;
    rs.random_draw = false;
    for (const Unknown& u : us) {
      const double radius = std::exp((rng.unit() - 0.5) * 2.0);
      const double phase = rng.unit() * 2.0 * M_PI;
      slot_of(rs, u) = std::polar(radius, phase);
    }
    bool ok = true;
    for (int it = 0; it < opt.max_iterations && ok; ++it) {
      Eigen::VectorXd scale(n);
      try {
        for (Eigen::Index i = 0; i < n; ++i) {
          const auto r = bae_residual(cfg, us[static_cast<std::size_t>(i)].a, us[static_cast<std::size_t>(i)].k, rs);
          scale[i] = r.scale > 0 ? r.scale : 1.0;
        }
        const Eigen::VectorXcd f = residual_vector(cfg, rs, us, scale);
        if (f.cwiseAbs().maxCoeff() < opt.tolerance * 1e-2) break;
        Eigen::MatrixXcd jac(n, n);
        for (Eigen::Index j = 0; j < n; ++j) {
          BetheRootSet<Complex> moved = rs;
          Complex& y = slot_of(moved, us[static_cast<std::size_t>(j)]);
          const Complex h = 1e-7 * std::max(1.0, std::abs(y));
          y += h;
          jac.col(j) = (residual_vector(cfg, moved, us, scale) - f) / h;
        }
        const Eigen::VectorXcd step = jac.fullPivLu().solve(-f);
        if (!step.allFinite()) {
          ok = false;
          break;
        }
        const double f0 = f.squaredNorm();
        double lambda = 1.0;
        for (; lambda > 1e-6; lambda *= 0.5) {
          BetheRootSet<Complex> trial = rs;
          for (Eigen::Index j = 0; j < n; ++j) slot_of(trial, us[static_cast<std::size_t>(j)]) += lambda * step[j];
          bool finite = true;
          double f1 = 0.0;
          try {
            f1 = residual_vector(cfg, trial, us, scale).squaredNorm();
          } catch (const Error&) {
            finite = false;
          }
          if (finite && std::isfinite(f1) && f1 < f0) {
            rs = std::move(trial);
            break;
          }
        }
        if (lambda <= 1e-6) ok = false;
      } catch (const Error&) {
        ok = false;
      }
    }
    if (!ok) continue;
    if (!roots_generic(rs, 4, 1e-6)) continue;
    if (max_bae_residual(cfg, rs) >= opt.tolerance) continue;
    BetheRootSet<Complex> c = canonical(rs);
    const bool dup = std::any_of(found.begin(), found.end(),
                                 [&](const auto& s) { return same_solution(s, c, opt.dedup); });
    if (!dup) found.push_back(std::move(c));
  }
  return found;
}

}  // namespace superbethe
