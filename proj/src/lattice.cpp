#include "superbethe/lattice.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "superbethe/error.hpp"

namespace superbethe {

namespace {

double magnitude2(const BigRational& v) {
  const double d = v.get_d();
  return d * d;
}
double magnitude2(const Complex& v) { return std::norm(v); }

template <class F>
bool is_nonzero(const F& v) {
  return v != F(0);
}

template <class F>
F power(const F& base, int k) {
  F out(1);
  const F b = k >= 0 ? base : F(F(1) / base);
  for (int i = 0; i < std::abs(k); ++i) out *= b;
  return out;
}

// Per-site data: the L-operator entries as functions of the aux/quantum labels.
template <class F>
struct SiteL {
  F diag_same[2];  // [u - w + 2(-1)^p], indexed by parity
  F diag_other;    // [u - w]
  F exch_plus;     // [2] q^{u-w}
  F exch_minus;    // [2] q^{-(u-w)}
  F exch_plus_odd;   // [-2] q^{u-w}
  F exch_minus_odd;  // [-2] q^{-(u-w)}
};

template <class F>
SiteL<F> site_l(const F& q, const F& v) {
  const F kappa = q - F(F(1) / q);
  auto br = [&](const F& m) { return F((m - F(F(1) / m)) / kappa); };
  SiteL<F> l;
  l.diag_same[0] = br(v * q * q);
  l.diag_same[1] = br(F(v / (q * q)));
  l.diag_other = br(v);
  const F two = br(q * q);
  l.exch_plus = two * v;
  l.exch_minus = F(two / v);
  l.exch_plus_odd = -l.exch_plus;
  l.exch_minus_odd = -l.exch_minus;
  return l;
}

}  // namespace

int label_parity(int r, int a) { return a <= r + 1 ? 0 : 1; }

std::vector<int> basis_labels(int r, int s, int n_sites, std::size_t index) {
  const std::size_t d = static_cast<std::size_t>(r + s + 2);
  std::vector<int> g(static_cast<std::size_t>(n_sites));
  for (auto& v : g) {
    v = static_cast<int>(index % d) + 1;
    index /= d;
  }
  return g;
}

template <class F>
TransferMatrix<F> transfer_matrix(int r, int s, int n_sites, const F& q, const F& x,
                                  const std::vector<F>& w) {
  if (r < 0 || s < 0 || n_sites < 1) throw Error(Errc::invalid_argument, "need r, s >= 0 and N >= 1");
  if (!w.empty() && static_cast<int>(w.size()) != n_sites) {
    throw Error(Errc::invalid_argument, "one inhomogeneity per site");
  }
  const int d = r + s + 2;
  std::size_t dim = 1;
  for (int i = 0; i < n_sites; ++i) {
    dim *= static_cast<std::size_t>(d);
    if (dim > kMaxTransferDimension) {
      throw Error(Errc::dimension_too_large, "transfer matrix dimension exceeds 4096");
    }
  }
  std::vector<SiteL<F>> sites;
  for (int i = 0; i < n_sites; ++i) sites.push_back(site_l(q, w.empty() ? x : F(x / w[static_cast<std::size_t>(i)])));

  TransferMatrix<F> t;
  t.r = r;
  t.s = s;
  t.n_sites = n_sites;
  t.dim = dim;
  t.entries.assign(dim * dim, F(0));

  std::vector<int> powers(static_cast<std::size_t>(n_sites));
  for (int i = 0, p = 1; i < n_sites; ++i, p *= d) powers[static_cast<std::size_t>(i)] = p;

  std::vector<int> gamma(static_cast<std::size_t>(n_sites));
  for (std::size_t col = 0; col < dim; ++col) {
    const std::vector<int> beta = basis_labels(r, s, n_sites, col);
    for (int a = 1; a <= d; ++a) {
      // walk the aux line from the trace index through sites 1..N
      auto walk = [&](auto&& self, int i, int aux, F value) -> void {
        if (i == n_sites) {
          if (aux != a) return;
          int sign = label_parity(r, a);
          int prefix = 0;
          for (int k = 0; k < n_sites; ++k) {
            if (k > 0) sign += (label_parity(r, gamma[static_cast<std::size_t>(k)]) + label_parity(r, beta[static_cast<std::size_t>(k)])) * prefix;
            prefix += label_parity(r, gamma[static_cast<std::size_t>(k)]);
          }
          std::size_t row = 0;
          for (int k = 0; k < n_sites; ++k) row += static_cast<std::size_t>((gamma[static_cast<std::size_t>(k)] - 1) * powers[static_cast<std::size_t>(k)]);
          if (sign % 2 == 0) {
            t.at(row, col) += value;
          } else {
            t.at(row, col) -= value;
          }
          return;
        }
        const SiteL<F>& l = sites[static_cast<std::size_t>(i)];
        const int b = beta[static_cast<std::size_t>(i)];
        // L^{cc}_{bb}
        gamma[static_cast<std::size_t>(i)] = b;
        self(self, i + 1, aux, F(value * (aux == b ? l.diag_same[label_parity(r, aux)] : l.diag_other)));
        // L^{c aux}_{aux c} with c = b != aux
        if (b != aux) {
          gamma[static_cast<std::size_t>(i)] = aux;
          const bool odd = label_parity(r, b) * label_parity(r, aux) == 1;
          const bool up = b > aux;
          const F& e = odd ? (up ? l.exch_plus_odd : l.exch_minus_odd) : (up ? l.exch_plus : l.exch_minus);
          self(self, i + 1, b, F(value * e));
        }
      };
      walk(walk, 0, a, F(1));
    }
  }
  return t;
}

template TransferMatrix<BigRational> transfer_matrix(int, int, int, const BigRational&, const BigRational&,
                                                     const std::vector<BigRational>&);
template TransferMatrix<Complex> transfer_matrix(int, int, int, const Complex&, const Complex&,
                                                 const std::vector<Complex>&);

template <class F>
double commutator_norm(const TransferMatrix<F>& a, const TransferMatrix<F>& b) {
  if (a.dim != b.dim) throw Error(Errc::invalid_argument, "transfer matrices of different size");
  const std::size_t n = a.dim;
  double comm = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) {
    na += magnitude2(a.entries[i]);
    nb += magnitude2(b.entries[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      F v(0);
      for (std::size_t k = 0; k < n; ++k) {
        if (is_nonzero(a.at(i, k)) && is_nonzero(b.at(k, j))) v += a.at(i, k) * b.at(k, j);
        if (is_nonzero(b.at(i, k)) && is_nonzero(a.at(k, j))) v -= b.at(i, k) * a.at(k, j);
      }
      comm += magnitude2(v);
    }
  }
  if (comm == 0.0) return 0.0;
  return std::sqrt(comm) / std::sqrt(na * nb);
}

template double commutator_norm(const TransferMatrix<BigRational>&, const TransferMatrix<BigRational>&);
template double commutator_norm(const TransferMatrix<Complex>&, const TransferMatrix<Complex>&);

template <class F>
bool preserves_sectors(const TransferMatrix<F>& t) {
  auto key = [&t](std::size_t idx) {
    auto g = basis_labels(t.r, t.s, t.n_sites, idx);
    std::sort(g.begin(), g.end());
    return g;
  };
  for (std::size_t i = 0; i < t.dim; ++i) {
    for (std::size_t j = 0; j < t.dim; ++j) {
      if (is_nonzero(t.at(i, j)) && key(i) != key(j)) return false;
    }
  }
  return true;
}

template bool preserves_sectors(const TransferMatrix<BigRational>&);
template bool preserves_sectors(const TransferMatrix<Complex>&);

template <class F>
F pseudo_vacuum_eigenvalue(const TransferMatrix<F>& t) {
  for (std::size_t i = 1; i < t.dim; ++i) {
    if (is_nonzero(t.at(i, 0))) {
      throw Error(Errc::invalid_argument, "the all-ones state is not an eigenvector");
    }
  }
  return t.at(0, 0);
}

template BigRational pseudo_vacuum_eigenvalue(const TransferMatrix<BigRational>&);
template Complex pseudo_vacuum_eigenvalue(const TransferMatrix<Complex>&);

std::vector<Complex> transfer_eigenvalues(const TransferMatrix<Complex>& t) {
  const auto n = static_cast<Eigen::Index>(t.dim);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) throw Error(Errc::diagonalization_failure, "eigenvalue iteration failed");
  return {es.eigenvalues().data(), es.eigenvalues().data() + n};
}

SpectralReport spectral_match(const RootSystemConfig& cfg, const BetheRootSet<Complex>& rs,
                              const std::vector<Complex>& xs) {
  const int n = rs.layout.n_sites();
  const std::vector<Complex> w = rs.layout.homogeneous() ? std::vector<Complex>{} : rs.w;
  const SkewShape box(Partition(std::vector<int>{1}));
  const TermSum t1 = t_skew(cfg, rs.layout, box);
  BetheRootSet<Complex> vac = rs;
  vac.layout = ParamLayout(n, std::vector<int>(static_cast<std::size_t>(cfg.colors()), 0), rs.layout.homogeneous());
  vac.roots.assign(static_cast<std::size_t>(cfg.colors()), {});
  const TermSum t1_vac = t_skew(cfg, vac.layout, box);
  const Valuation<Complex> val = rs.valuation();
  const Valuation<Complex> val_vac = vac.valuation();

  SpectralReport rep;
  for (const Complex& x : xs) {
    const TransferMatrix<Complex> t = transfer_matrix(cfg.r, cfg.s, n, rs.q, x, w);
    SpectralSample smp;
    smp.x = x;
    smp.rho = pseudo_vacuum_eigenvalue(t) / eval(t1_vac, x, val_vac);
    smp.predicted = smp.rho * eval(t1, x, val);
    double best = INFINITY;
    for (const Complex& ev : transfer_eigenvalues(t)) {
      const double dist = std::abs(ev - smp.predicted);
      if (dist < best) {
        best = dist;
        smp.nearest = ev;
      }
    }
    smp.mismatch = best / std::abs(smp.predicted);
    rep.max_mismatch = std::max(rep.max_mismatch, smp.mismatch);
    rep.samples.push_back(smp);
  }
  return rep;
}

}  // namespace superbethe
