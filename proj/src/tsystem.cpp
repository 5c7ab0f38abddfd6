#include "superbethe/tsystem.hpp"

#include "superbethe/error.hpp"

namespace superbethe {

namespace {

TermSum sign_times(int exponent, TermSum f) { return exponent % 2 == 0 ? f : -f; }

TermSum one() { return TermSum::one(); }

}  // namespace

TGrid::TGrid(RootSystemConfig cfg, ParamLayout layout) : cfg_(std::move(cfg)), layout_(std::move(layout)) {}

const TermSum& TGrid::at(int a, int m) {
  if (a < 0 || m < 0) throw Error(Errc::invalid_argument, "T_m^a needs a, m >= 0");
  const auto key = std::make_pair(a, m);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  TermSum v = (a == 0 || m == 0)
                  ? one()
                  : t_skew(cfg_, layout_, SkewShape(Partition(std::vector<int>(static_cast<std::size_t>(a), m))));
  return cache_.emplace(key, std::move(v)).first->second;
}

FactoredTerm g_factor(const ParamLayout& layout, int a, int m) {
  FactoredTerm g;
  if (a != 1) return g;
  for (int j = 1; j <= m; ++j) g *= p_factor(layout, -m + 2 * j - 2);
  return g;
}

TermSum hirota_residual(TGrid& grid, int a, int m) {
  if (a < 1 || m < 1) throw Error(Errc::invalid_argument, "Hirota relation needs a, m >= 1");
  const TermSum& t = grid.at(a, m);
  TermSum res = t.shifted(-1) * t.shifted(1);
  res -= grid.at(a, m + 1) * grid.at(a, m - 1);
  res -= (grid.at(a - 1, m) * grid.at(a + 1, m)) * g_factor(grid.layout(), a, m);
  return res;
}

TermSum g_identity_residual(const ParamLayout& layout, int a, int m) {
  if (a < 1 || m < 1) throw Error(Errc::invalid_argument, "g identity needs a, m >= 1");
  const FactoredTerm g = g_factor(layout, a, m);
  return TermSum(g.shifted(1) * g.shifted(-1)) - TermSum(g_factor(layout, a, m + 1) * g_factor(layout, a, m - 1));
}

TermSum red1_residual(TGrid& grid, int m) {
  const int r = grid.config().r;
  const int s = grid.config().s;
  if (m < s + 1) throw Error(Errc::invalid_argument, "red1 needs m >= s+1");
  const ParamLayout& L = grid.layout();
  const FactoredTerm factor = f_factor(L, m - s).shifted(r - s + 2) * q_factor(L, r + 1, -m) *
                              q_factor(L, r + 1, m - 2 * s - 2, -1);
  return grid.at(r + 1, m) - grid.at(r + 1, s + 1).shifted(m - s - 1) * factor;
}

TermSum red2_residual(TGrid& grid, int a) {
  const int r = grid.config().r;
  const int s = grid.config().s;
  if (a < r + 1) throw Error(Errc::invalid_argument, "red2 needs a >= r+1");
  const ParamLayout& L = grid.layout();
  const FactoredTerm factor = q_factor(L, r + 1, -a - s + r) * q_factor(L, r + 1, a - s - r - 2, -1);
  return grid.at(a, s + 1) - sign_times((s + 1) * (a - r - 1), grid.at(r + 1, s + 1).shifted(a - r - 1) * factor);
}

TermSum dual_residual(TGrid& grid, int a) {
  const int r = grid.config().r;
  const int s = grid.config().s;
  if (a < 1) throw Error(Errc::invalid_argument, "duality needs a >= 1");
  const FactoredTerm factor = f_factor(grid.layout(), a).shifted(r - s + 2);
  return grid.at(r + 1, a + s) - sign_times((s + 1) * (a - 1), grid.at(r + a, s + 1) * factor);
}

TermSum laplace1_residual(TGrid& grid, int m) {
  const int r = grid.config().r;
  const int s = grid.config().s;
  if (m < s + 2) throw Error(Errc::invalid_argument, "laplace1 needs m >= s+2");
  const TermSum& t = grid.at(r + 1, m);
  return t.shifted(-1) * t.shifted(1) - grid.at(r + 1, m + 1) * grid.at(r + 1, m - 1);
}

TermSum laplace2_residual(TGrid& grid, int a) {
  const int r = grid.config().r;
  const int s = grid.config().s;
  if (a < r + 2) throw Error(Errc::invalid_argument, "laplace2 needs a >= r+2");
  const TermSum& t = grid.at(a, s + 1);
  return t.shifted(-1) * t.shifted(1) -
         (grid.at(a - 1, s + 1) * grid.at(a + 1, s + 1)) * g_factor(grid.layout(), a, s + 1);
}

TermSum boundary_residual(TGrid& grid) {
  const int r = grid.config().r;
  const int s = grid.config().s;
  const TermSum& t = grid.at(r + 1, s + 1);
  const FactoredTerm inv_f2 = f_factor(grid.layout(), 2).shifted(r - s + 2).inverse();
  const TermSum second = sign_times(s + 1, grid.at(r, s + 1) * inv_f2) * g_factor(grid.layout(), r + 1, s + 1);
  return t.shifted(-1) * t.shifted(1) - grid.at(r + 1, s + 2) * (grid.at(r + 1, s) + second);
}

bool vanishing_check(TGrid& grid, int a, int m, const Valuation<BigRational>& val) {
  const TermSum& t = grid.at(a, m);
  if (t.is_zero()) return true;
  return certify_zero(t, val).zero;
}

std::vector<ReductionEntry> reduction_residuals(TGrid& grid, int max_index) {
  const int r = grid.config().r;
  const int s = grid.config().s;
  std::vector<ReductionEntry> out;
  for (int m = s + 1; m <= max_index; ++m) out.push_back({"red1", m, red1_residual(grid, m)});
  for (int a = r + 1; a <= max_index; ++a) out.push_back({"red2", a, red2_residual(grid, a)});
  for (int a = 1; a <= max_index; ++a) out.push_back({"dual", a, dual_residual(grid, a)});
  for (int m = s + 2; m <= max_index; ++m) out.push_back({"laplace1", m, laplace1_residual(grid, m)});
  for (int a = r + 2; a <= max_index; ++a) out.push_back({"laplace2", a, laplace2_residual(grid, a)});
  out.push_back({"boundary", 0, boundary_residual(grid)});
  return out;
}

}  // namespace superbethe
