#include "superbethe/dvf.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "superbethe/rng.hpp"

namespace superbethe {

namespace {

BoxFunction box(int label, int vac, std::vector<QFactor> q) { return {label, vac, std::move(q)}; }

std::vector<int> parity_signs(const LabelSet& labels, int first_color_label, int colors) {
  std::vector<int> t;
  for (int a = 0; a < colors; ++a) t.push_back(labels.parity(first_color_label + a) == 0 ? 1 : -1);
  return t;
}

}  // namespace

const BoxFunction& RootSystemConfig::box(int label) const {
  return boxes.at(static_cast<std::size_t>(labels.index_of(label)));
}

std::vector<std::vector<int>> distinguished_cartan(int r, int s) {
  const int n = r + s + 2;
  auto metric = [r](int i) { return i <= r + 1 ? 1 : -1; };
  // alpha_a = e_a - e_{a+1}
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n - 1), std::vector<int>(n - 1, 0));
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) {
      int v = 0;
      for (int i = 1; i <= n; ++i) {
        const int ca = (i == a) - (i == a + 1);
        const int cb = (i == b) - (i == b + 1);
        v += metric(i) * ca * cb;
      }
      c[a - 1][b - 1] = v;
    }
  }
  return c;
}

RootSystemConfig distinguished_covariant(int r, int s) {
  if (r < 0 || s < 0) throw Error(Errc::invalid_argument, "r and s must be non-negative");
  RootSystemConfig cfg;
  cfg.name = "distinguished-covariant";
  cfg.r = r;
  cfg.s = s;
  cfg.labels = LabelSet::distinguished(r, s);
  for (int a = 1; a <= r + s + 2; ++a) {
    const int vac = a == 1 ? 2 : 0;
    if (a <= r + 1) {
      cfg.boxes.push_back(box(a, vac, {{a - 1, a + 1, 1}, {a, a - 2, 1}, {a - 1, a - 1, -1}, {a, a, -1}}));
    } else {
      const int c = 2 * r - a;
      cfg.boxes.push_back(
          box(a, vac, {{a - 1, c + 1, 1}, {a, c + 4, 1}, {a - 1, c + 3, -1}, {a, c + 2, -1}}));
    }
  }
  cfg.cartan = distinguished_cartan(r, s);
  for (int a = 1; a <= r + s + 1; ++a) {
    cfg.t_signs.push_back(a <= r + 1 ? 1 : -1);
    cfg.degrees.push_back(a == r + 1 ? 1 : 0);
  }
  return cfg;
}

RootSystemConfig distinguished_contravariant(int r, int s) {
  if (r < 0 || s < 0) throw Error(Errc::invalid_argument, "r and s must be non-negative");
  RootSystemConfig cfg = distinguished_covariant(r, s);
  cfg.name = "distinguished-contravariant";
  std::vector<int> labels;
  std::vector<int> parities;
  for (int a = -r - s - 2; a <= -1; ++a) {
    labels.push_back(a);
    parities.push_back(a >= -r - 1 ? 0 : 1);
  }
  cfg.labels = LabelSet(labels, parities);
  cfg.boxes.clear();
  for (int a : labels) {
    const int vac = a == -1 ? r - s - 2 : r - s;
    const int lo = -a - 1;
    const int hi = -a;
    if (a >= -r - 1) {
      const int c = r - s + a;
      cfg.boxes.push_back(box(a, vac, {{lo, c - 1, 1}, {hi, c + 2, 1}, {lo, c + 1, -1}, {hi, c, -1}}));
    } else {
      const int c = -r - s - a;
      cfg.boxes.push_back(box(a, vac, {{lo, c - 1, 1}, {hi, c - 4, 1}, {lo, c - 3, -1}, {hi, c - 2, -1}}));
    }
  }
  return cfg;
}

RootSystemConfig sl12_app_c() {
  RootSystemConfig cfg;
  cfg.name = "sl12-appC";
  cfg.r = 0;
  cfg.s = 1;
  cfg.labels = LabelSet({1, 2, 3}, {1, 0, 1});
  cfg.boxes = {
      box(1, -2, {{1, 1, 1}, {1, -1, -1}}),
      box(2, 0, {{1, 1, 1}, {2, -2, 1}, {1, -1, -1}, {2, 0, -1}}),
      box(3, 0, {{2, -2, 1}, {2, 0, -1}}),
  };
  cfg.cartan = {{0, -1}, {-1, 0}};
  cfg.degrees = {1, 1};
  cfg.t_signs = parity_signs(cfg.labels, 1, 2);
  return cfg;
}

RootSystemConfig sl12_app_d() {
  RootSystemConfig cfg;
  cfg.name = "sl12-appD";
  cfg.r = 0;
  cfg.s = 1;
  cfg.labels = LabelSet({1, 2, 3}, {1, 1, 0});
  cfg.boxes = {
      box(1, -2, {{1, 1, 1}, {1, -1, -1}}),
      box(2, 0, {{1, -3, 1}, {2, 0, 1}, {1, -1, -1}, {2, -2, -1}}),
      box(3, 0, {{2, 0, 1}, {2, -2, -1}}),
  };
  cfg.cartan = {{-2, 1}, {1, 0}};
  cfg.degrees = {0, 1};
  cfg.t_signs = parity_signs(cfg.labels, 1, 2);
  return cfg;
}

RootSystemConfig make_preset(const std::string& name, int r, int s) {
  if (name == "distinguished-covariant") return distinguished_covariant(r, s);
  if (name == "distinguished-contravariant") return distinguished_contravariant(r, s);
  if (name == "sl12-appC") return sl12_app_c();
  if (name == "sl12-appD") return sl12_app_d();
  throw Error(Errc::config_error, "unknown preset '" + name + "'");
}

// ------------------------------------------------------------ ParamLayout

ParamLayout::ParamLayout(int n_sites, std::vector<int> counts, bool homogeneous)
    : n_sites_(n_sites), homogeneous_(homogeneous), counts_(std::move(counts)) {
  if (n_sites_ < 0) throw Error(Errc::invalid_argument, "negative number of sites");
  int next = homogeneous_ ? 1 : n_sites_ + 1;
  for (int c : counts_) {
    if (c < 0) throw Error(Errc::invalid_argument, "negative root count");
    offsets_.push_back(next);
    next += c;
  }
  num_slots_ = next - 1;
}

int ParamLayout::count(int color) const noexcept {
  if (color < 1 || color > colors()) return 0;
  return counts_[static_cast<std::size_t>(color - 1)];
}

std::uint32_t ParamLayout::site_slot(int j) const {
  if (j < 1 || j > n_sites_) throw Error(Errc::invalid_argument, "site index out of range");
  return homogeneous_ ? AtomKey::kOrigin : static_cast<std::uint32_t>(j);
}

std::uint32_t ParamLayout::root_slot(int color, int k) const {
  if (k < 1 || k > count(color)) throw Error(Errc::invalid_argument, "root index out of range");
  return static_cast<std::uint32_t>(offsets_[static_cast<std::size_t>(color - 1)] + k - 1);
}

template <class F>
Valuation<F> BetheRootSet<F>::valuation() const {
  std::vector<F> params(static_cast<std::size_t>(layout.num_slots()));
  if (!layout.homogeneous()) {
    for (int j = 1; j <= layout.n_sites(); ++j) params[layout.site_slot(j) - 1] = w.at(j - 1);
  }
  for (int a = 1; a <= layout.colors(); ++a) {
    for (int k = 1; k <= layout.count(a); ++k) {
      params[layout.root_slot(a, k) - 1] = roots.at(a - 1).at(k - 1);
    }
  }
  return Valuation<F>(q, std::move(params));
}

template struct BetheRootSet<BigRational>;
template struct BetheRootSet<Complex>;

BetheRootSet<BigRational> random_roots(const ParamLayout& layout, const BigRational& q, Rng& rng,
                                       int max_shift) {
  auto draw = [&rng]() {
    const std::int64_t num = rng.uniform(1, 97) * (rng.uniform(0, 1) == 0 ? 1 : -1);
    const std::int64_t den = rng.uniform(1, 97);
    BigRational v(static_cast<long>(num), static_cast<unsigned long>(den));
    v.canonicalize();
    return v;
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BetheRootSet<BigRational> rs;
    rs.layout = layout;
    rs.q = q;
    if (!layout.homogeneous()) {
      for (int j = 0; j < layout.n_sites(); ++j) rs.w.push_back(draw());
    } else {
      rs.w.assign(static_cast<std::size_t>(layout.n_sites()), BigRational(1));
    }
    for (int a = 1; a <= layout.colors(); ++a) {
      auto& v = rs.roots.emplace_back();
      for (int k = 0; k < layout.count(a); ++k) v.push_back(draw());
    }
    if (parameters_generic(rs.valuation(), max_shift)) return rs;
  }
  throw Error(Errc::invalid_argument, "could not draw generic parameters");
}

BetheRootSet<Complex> to_complex(const BetheRootSet<BigRational>& rs) {
  BetheRootSet<Complex> out;
  out.layout = rs.layout;
  out.q = Complex(rs.q.get_d(), 0.0);
  for (const auto& v : rs.w) out.w.emplace_back(v.get_d(), 0.0);
  for (const auto& col : rs.roots) {
    auto& dst = out.roots.emplace_back();
    for (const auto& v : col) dst.emplace_back(v.get_d(), 0.0);
  }
  out.random_draw = rs.random_draw;
  return out;
}

// ---------------------------------------------------------- P, Q, z and F

FactoredTerm p_factor(const ParamLayout& layout, int shift, int exp) {
  FactoredTerm t;
  for (int j = 1; j <= layout.n_sites(); ++j) {
    t *= FactoredTerm::bracket(AtomKey::make(layout.site_slot(j), 1, shift), exp);
  }
  return t;
}

FactoredTerm q_factor(const ParamLayout& layout, int color, int shift, int exp) {
  FactoredTerm t;
  for (int k = 1; k <= layout.count(color); ++k) {
    t *= FactoredTerm::bracket(AtomKey::make(layout.root_slot(color, k), 1, shift), exp);
  }
  return t;
}

FactoredTerm z_function(const RootSystemConfig& cfg, const ParamLayout& layout, int label) {
  const BoxFunction& b = cfg.box(label);
  FactoredTerm t = p_factor(layout, b.vacuum_shift);
  for (const QFactor& f : b.q) t *= q_factor(layout, f.color, f.shift, f.exp);
  return t;
}

FactoredTerm f_factor(const ParamLayout& layout, int a) {
  if (a < 0) throw Error(Errc::vanishing_normalizer, "F^a vanishes for a < 0");
  if (a == 0) return p_factor(layout, -1, -1);
  FactoredTerm t;
  for (int j = 1; j <= a - 1; ++j) t *= p_factor(layout, -2 * j + a - 1);
  return t;
}

FactoredTerm f_normalizer(const ParamLayout& layout, const SkewShape& shape) {
  const Partition mc = conjugate(shape.outer());
  const Partition lc = conjugate(shape.inner());
  const int mu1 = shape.cols();
  FactoredTerm t;
  for (int j = 1; j <= mu1; ++j) {
    const int shift = mc[1] - mu1 - mc[j] - lc[j] + 2 * j - 1;
    t *= f_factor(layout, mc[j] - lc[j]).shifted(shift);
  }
  return t;
}

// ------------------------------------------------------------ tableau sum

namespace {

int cell_shift(const SkewShape& shape, int i, int j) {
  return -shape.cols() + conjugate(shape.outer())[1] - 2 * i + 2 * j;
}

// Exponent vectors over a fixed sorted atom dictionary, updated on push/pop.
class SumVisitor {
 public:
  SumVisitor(const RootSystemConfig& cfg, const ParamLayout& layout, const SkewShape& shape,
             const CellOrder& order)
      : labels_(cfg.labels) {
    const int nlab = cfg.labels.size();
    std::vector<FactoredTerm> z;
    for (int l = 0; l < nlab; ++l) z.push_back(z_function(cfg, layout, cfg.labels.label(l)));
    const FactoredTerm norm = f_normalizer(layout, shape).inverse();

    std::vector<AtomKey> keys;
    for (const auto& cell : order.cells) {
      const int sh = cell_shift(shape, cell.i, cell.j);
      for (const auto& t : z) {
        for (const auto& ap : t.atoms()) keys.push_back(ap.atom.shifted(sh));
      }
    }
    for (const auto& ap : norm.atoms()) keys.push_back(ap.atom);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    keys_ = keys;
    auto index = [&](AtomKey k) {
      return static_cast<int>(std::lower_bound(keys_.begin(), keys_.end(), k) - keys_.begin());
    };

    cells_.resize(order.cells.size());
    for (std::size_t p = 0; p < order.cells.size(); ++p) {
      const int sh = cell_shift(shape, order.cells[p].i, order.cells[p].j);
      for (const auto& t : z) {
        auto& delta = cells_[p].emplace_back();
        for (const auto& ap : t.atoms()) delta.push_back({index(ap.atom.shifted(sh)), ap.exp});
      }
    }
    exps_.assign(keys_.size(), 0);
    for (const auto& ap : norm.atoms()) exps_[static_cast<std::size_t>(index(ap.atom))] += ap.exp;
  }

  void push(int pos, int l) {
    for (const auto& [k, e] : cells_[static_cast<std::size_t>(pos)][static_cast<std::size_t>(l)]) {
      exps_[static_cast<std::size_t>(k)] += e;
    }
    odd_ += labels_.parity_at(l);
  }
  void pop(int pos, int l) {
    for (const auto& [k, e] : cells_[static_cast<std::size_t>(pos)][static_cast<std::size_t>(l)]) {
      exps_[static_cast<std::size_t>(k)] -= e;
    }
    odd_ -= labels_.parity_at(l);
  }
  void leaf() {
    scratch_.clear();
    for (std::size_t k = 0; k < keys_.size(); ++k) {
      if (exps_[k] != 0) scratch_.push_back({keys_[k], exps_[k]});
    }
    acc_.add(Fraction(odd_ % 2 == 0 ? 1 : -1), scratch_);
  }

  TermSum take() { return acc_.take(); }

 private:
  const LabelSet& labels_;
  std::vector<AtomKey> keys_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> cells_;
  std::vector<int> exps_;
  std::vector<AtomPower> scratch_;
  int odd_ = 0;
  TermAccumulator acc_;
};

}  // namespace

TermSum t_skew(const RootSystemConfig& cfg, const ParamLayout& layout, const SkewShape& shape) {
  if (shape.empty()) return TermSum::one();
  const CellOrder order(shape);
  SumVisitor v(cfg, layout, shape, order);
  walk_tableaux(order, cfg.labels, v);
  return v.take();
}

FactoredTerm tableau_term(const RootSystemConfig& cfg, const ParamLayout& layout, const Tableau& t) {
  FactoredTerm out;
  int odd = 0;
  const SkewShape& shape = t.shape();
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = shape.inner()[i] + 1; j <= shape.outer()[i]; ++j) {
      const int b = t.at(i, j);
      odd += cfg.labels.parity(b);
      out *= z_function(cfg, layout, b).shifted(cell_shift(shape, i, j));
    }
  }
  return out.with_coeff(Fraction(odd % 2 == 0 ? 1 : -1));
}

// ------------------------------------------------------ generating series

namespace {

using Series = std::vector<TermSum>;

// (a * b) with X f(u) = f(u+2) X, truncated at `order`.
Series series_mul(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order + 1));
  for (int i = 0; i < static_cast<int>(a.size()) && i <= order; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(b.size()) && i + j <= order; ++j) {
      if (b[static_cast<std::size_t>(j)].is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] +=
          a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)].shifted(2 * i);
    }
  }
  return out;
}

// (1 + eps z X)^{+1} or ^{-1}
Series factor_series(const FactoredTerm& z, int eps, bool inverse, int order) {
  Series s(static_cast<std::size_t>(order + 1));
  s[0] = TermSum::one();
  if (order == 0) return s;
  if (!inverse) {
    s[1] = TermSum(z.with_coeff(Fraction(eps)));
    return s;
  }
  FactoredTerm run;
  for (int k = 1; k <= order; ++k) {
    run *= z.shifted(2 * (k - 1));
    s[static_cast<std::size_t>(k)] = TermSum(run.with_coeff(Fraction((k % 2 == 0) ? 1 : -eps)));
  }
  return s;
}

struct SeriesFactor {
  int label;
  int eps;
  bool inverse;
};

Series expand(const RootSystemConfig& cfg, const ParamLayout& layout,
              const std::vector<SeriesFactor>& factors, int order) {
  Series acc(static_cast<std::size_t>(order + 1));
  acc[0] = TermSum::one();
  for (const auto& f : factors) {
    acc = series_mul(acc, factor_series(z_function(cfg, layout, f.label), f.eps, f.inverse, order),
                     order);
  }
  return acc;
}

std::vector<int> labels_of(const LabelSet& labels, int parity, bool descending) {
  std::vector<int> out;
  for (int i = 0; i < labels.size(); ++i) {
    if (parity < 0 || labels.parity_at(i) == parity) out.push_back(labels.label(i));
  }
  if (descending) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<TermSum> generating_coefficients(const RootSystemConfig& cfg, const ParamLayout& layout,
                                             SeriesKind kind, int order) {
  if (order < 0) return {};
  std::vector<SeriesFactor> factors;
  if (kind == SeriesKind::column) {
    for (int b : labels_of(cfg.labels, -1, true)) factors.push_back({b, 1, cfg.labels.parity(b) == 1});
  } else {
    for (int b : labels_of(cfg.labels, -1, false)) {
      factors.push_back({b, -1, cfg.labels.parity(b) == 0});
    }
  }
  return expand(cfg, layout, factors, order);
}

std::vector<TermSum> t_series_table(const RootSystemConfig& cfg, const ParamLayout& layout,
                                    SeriesKind kind, int max_n) {
  std::vector<TermSum> c = generating_coefficients(cfg, layout, kind, max_n);
  for (int n = 0; n <= max_n; ++n) {
    TermSum& t = c[static_cast<std::size_t>(n)];
    t = t.shifted(-(n - 1));
    if (kind == SeriesKind::column) t *= f_factor(layout, n).inverse();
  }
  return c;
}

TermSum t_series(const RootSystemConfig& cfg, const ParamLayout& layout, SeriesKind kind, int n) {
  if (n < 0) return {};
  return t_series_table(cfg, layout, kind, n)[static_cast<std::size_t>(n)];
}

// ------------------------------------------------------------ determinants

TermSum determinant(const std::vector<std::vector<TermSum>>& m) {
  const int n = static_cast<int>(m.size());
  if (n > kMaxDeterminantSize) {
    throw Error(Errc::matrix_too_large, "determinant of size " + std::to_string(n) + " exceeds " +
                                            std::to_string(kMaxDeterminantSize));
  }
  if (n == 0) return TermSum::one();
  // minor[mask]: rows n-popcount(mask)..n-1 against the columns in mask
  std::vector<TermSum> minor(std::size_t{1} << n);
  minor[0] = TermSum::one();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int row = n - std::popcount(mask);
    TermAccumulator acc;
    int before = 0;
    for (int j = 0; j < n; ++j) {
      if ((mask & (1U << j)) == 0) continue;
      const TermSum& e = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
      const TermSum& rest = minor[mask & ~(1U << j)];
      if (!e.is_zero() && !rest.is_zero()) {
        const Fraction sign(before % 2 == 0 ? 1 : -1);
        for (const auto& a : e.terms()) {
          for (const auto& b : rest.terms()) acc.add_product(sign * a.coeff() * b.coeff(), a.atoms(), b.atoms());
        }
      }
      ++before;
    }
    minor[mask] = acc.take();
  }
  return minor[(1U << n) - 1];
}

namespace {

TermSum jt_determinant(const RootSystemConfig& cfg, const ParamLayout& layout,
                       const SkewShape& shape, JtAxis axis) {
  const Partition& mu = shape.outer();
  const Partition& la = shape.inner();
  const Partition mc = conjugate(mu);
  const Partition lc = conjugate(la);
  const int mu1 = mu[1];
  const int mc1 = mc[1];
  const int n = axis == JtAxis::column ? mu1 : mc1;
  if (n > kMaxDeterminantSize) {
    throw Error(Errc::matrix_too_large, "Jacobi-Trudi matrix of size " + std::to_string(n));
  }
  const int max_index = mu1 + mc1;
  const auto table = t_series_table(
      cfg, layout, axis == JtAxis::column ? SeriesKind::column : SeriesKind::row, max_index);
  auto entry = [&](int k, int shift) -> TermSum {
    if (k < 0) return {};
    return table.at(static_cast<std::size_t>(k)).shifted(shift);
  };
  std::vector<std::vector<TermSum>> m(static_cast<std::size_t>(n),
                                      std::vector<TermSum>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      TermSum& e = m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (axis == JtAxis::column) {
        e = entry(mc[i] - lc[j] - i + j, -mu1 + mc1 - mc[i] - lc[j] + i + j - 1);
      } else {
        e = entry(mu[j] - la[i] + i - j, -mu1 + mc1 + mu[j] + la[i] - i - j + 1);
      }
    }
  }
  return determinant(m);
}

}  // namespace

TermSum row_determinant(const RootSystemConfig& cfg, const ParamLayout& layout,
                        const SkewShape& shape) {
  return jt_determinant(cfg, layout, shape, JtAxis::row);
}

TermSum jacobi_trudi(const RootSystemConfig& cfg, const ParamLayout& layout, const SkewShape& shape,
                     JtAxis axis) {
  TermSum d = jt_determinant(cfg, layout, shape, axis);
  if (axis == JtAxis::row) d *= f_normalizer(layout, shape).inverse();
  return d;
}

// ----------------------------------------------- mixed, crossing and A/B

namespace {

ParamLayout trivial_vacuum(const ParamLayout& layout) { return ParamLayout(0, layout.counts()); }

TermSum signed_z(const RootSystemConfig& cfg, const ParamLayout& layout, int label, int shift) {
  const int sign = cfg.labels.parity(label) == 0 ? 1 : -1;
  return TermSum(z_function(cfg, layout, label).shifted(shift).with_coeff(Fraction(sign)));
}

}  // namespace

TermSum mixed_identity_residual(int r, int s, const ParamLayout& layout) {
  if (r == s) throw Error(Errc::equal_rank, "the mixed identity requires r != s");
  const ParamLayout lay = trivial_vacuum(layout);
  const RootSystemConfig co = distinguished_covariant(r, s);
  const RootSystemConfig contra = distinguished_contravariant(r, s);
  TermSum lhs;
  TermSum tdot;
  TermSum t1;
  for (int i = 0; i < contra.labels.size(); ++i) {
    tdot += signed_z(contra, lay, contra.labels.label(i), s);
  }
  for (int j = 0; j < co.labels.size(); ++j) t1 += signed_z(co, lay, co.labels.label(j), r);
  for (int i = 0; i < contra.labels.size(); ++i) {
    const int a = contra.labels.label(i);
    for (int j = 0; j < co.labels.size(); ++j) {
      const int b = co.labels.label(j);
      if (a == -1 && b == 1) continue;
      lhs += signed_z(contra, lay, a, s) * signed_z(co, lay, b, r);
    }
  }
  return lhs - (tdot * t1 - TermSum::one());
}

TermSum crossing_residual(int r, int s, int a, const ParamLayout& layout) {
  const RootSystemConfig co = distinguished_covariant(r, s);
  const RootSystemConfig contra = distinguished_contravariant(r, s);
  const TermSum lhs(z_function(co, layout, a));
  TermSum rhs = negate_parameters(reflect(TermSum(z_function(contra, layout, -a)), s - r));
  if (layout.n_sites() % 2 != 0) rhs = -rhs;
  return lhs - rhs;
}

TermSum ab_function(const RootSystemConfig& cfg, const ParamLayout& layout, AbKind kind, int n) {
  if (n < 0) return {};
  const ParamLayout lay = trivial_vacuum(layout);
  std::vector<SeriesFactor> factors;
  switch (kind) {
    case AbKind::a_row:
      for (int b : labels_of(cfg.labels, 0, false)) factors.push_back({b, -1, true});
      break;
    case AbKind::b_col:
      for (int b : labels_of(cfg.labels, 1, false)) factors.push_back({b, -1, false});
      break;
    case AbKind::b_row:
      for (int b : labels_of(cfg.labels, 1, true)) factors.push_back({b, 1, true});
      break;
    case AbKind::a_col:
      for (int b : labels_of(cfg.labels, 0, true)) factors.push_back({b, 1, false});
      break;
  }
  const Series c = expand(cfg, lay, factors, n);
  return c[static_cast<std::size_t>(n)].shifted(-(n - 1));
}

TermSum convolution_residual(const RootSystemConfig& cfg, const ParamLayout& layout,
                             SeriesKind kind, int n) {
  if (n < 0) return {};
  const ParamLayout lay = trivial_vacuum(layout);
  int even = 0;
  for (int i = 0; i < cfg.labels.size(); ++i) even += cfg.labels.parity_at(i) == 0;
  const int odd = cfg.labels.size() - even;
  TermSum conv;
  if (kind == SeriesKind::column) {
    for (int l = 0; l <= std::min(even, n); ++l) {
      conv += ab_function(cfg, lay, AbKind::b_row, n - l).shifted(-l) *
              ab_function(cfg, lay, AbKind::a_col, l).shifted(n - l);
    }
  } else {
    for (int l = 0; l <= std::min(odd, n); ++l) {
      conv += ab_function(cfg, lay, AbKind::a_row, n - l).shifted(-l) *
              ab_function(cfg, lay, AbKind::b_col, l).shifted(n - l);
    }
  }
  return t_series(cfg, lay, kind, n) - conv;
}

// --------------------------------------------------------------- top term

FactoredTerm top_term(const RootSystemConfig& cfg, const ParamLayout& layout, const Partition& mu) {
  return tableau_term(cfg, layout, top_tableau(mu, cfg.r, cfg.s));
}

BigRational top_term_expected(const RootSystemConfig& cfg, const ParamLayout& layout,
                              const Partition& mu, const BigRational& q) {
  const std::vector<int> a = kac_dynkin_covariant(mu, cfg.r, cfg.s);
  int below = 0;
  for (int i = cfg.r + 2; i <= mu.length(); ++i) below += mu[i];
  long e = 0;
  for (int b = 1; b <= cfg.colors(); ++b) {
    e += static_cast<long>(layout.count(b)) * a[static_cast<std::size_t>(b - 1)] *
         cfg.t_signs[static_cast<std::size_t>(b - 1)];
  }
  e *= -2;
  BigRational v = 1;
  const BigRational base = e < 0 ? BigRational(1 / q) : q;
  for (long i = 0; i < std::labs(e); ++i) v *= base;
  return below % 2 == 0 ? v : BigRational(-v);
}

}  // namespace superbethe
