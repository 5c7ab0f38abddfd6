#pragma once

// Hand-written displays: P(u+c) and Q_a(u+c) atoms assembled term by term.

#include "superbethe/dvf.hpp"

namespace superbethe::fixtures {

// Builds display terms directly from atom slots: P(u+c) and Q_a(u+c).
struct Display {
  const ParamLayout& lay;

  FactoredTerm p(int shift, int exp = 1) const {
    FactoredTerm t;
    for (int j = 1; j <= lay.n_sites(); ++j) {
      const std::uint32_t slot = lay.homogeneous() ? 0U : static_cast<std::uint32_t>(j);
      t *= FactoredTerm::bracket(AtomKey::make(slot, 1, shift), exp);
    }
    return t;
  }
  FactoredTerm q(int color, int shift, int exp = 1) const {
    FactoredTerm t;
    for (int k = 1; k <= lay.count(color); ++k) {
      t *= FactoredTerm::bracket(AtomKey::make(lay.root_slot(color, k), 1, shift), exp);
    }
    return t;
  }
};

inline TermSum sum(std::initializer_list<FactoredTerm> terms) {
  TermSum s;
  for (const auto& t : terms) s += TermSum(t);
  return s;
}

inline FactoredTerm neg(const FactoredTerm& t) { return t.with_coeff(-t.coeff()); }


/// r=1, s=0 with sites: T^1, T^2, T^3 and T_{(2^2)} (layout N=2, counts {2,1}).
inline TermSum display_t1(const ParamLayout& lay) {
  const Display d{lay};
  return sum({d.p(2) * d.q(1, -1) * d.q(1, 1, -1),
              d.p(0) * d.q(1, 3) * d.q(2, 0) * d.q(1, 1, -1) * d.q(2, 2, -1),
              neg(d.p(0) * d.q(2, 0) * d.q(2, 2, -1))});
}

inline TermSum display_t2(const ParamLayout& lay) {
  const Display d{lay};
  return sum({d.p(3) * d.q(2, -1) * d.q(2, 1, -1),
              neg(d.p(3) * d.q(1, 0) * d.q(2, -1) * d.q(1, 2, -1) * d.q(2, 1, -1)),
              neg(d.p(1) * d.q(1, 4) * d.q(2, -1) * d.q(1, 2, -1) * d.q(2, 3, -1)),
              d.p(1) * d.q(2, -1) * d.q(2, 3, -1)});
}

inline TermSum display_t3(const ParamLayout& lay) {
  const Display d{lay};
  return sum({neg(d.p(4) * d.q(2, -2) * d.q(2, 2, -1)),
              d.p(4) * d.q(1, 1) * d.q(2, -2) * d.q(1, 3, -1) * d.q(2, 2, -1),
              d.p(2) * d.q(1, 5) * d.q(2, -2) * d.q(1, 3, -1) * d.q(2, 4, -1),
              neg(d.p(2) * d.q(2, -2) * d.q(2, 4, -1))});
}

inline TermSum display_t22(const ParamLayout& lay) {
  const Display d{lay};
  return sum({d.p(2) * d.p(4) * d.q(2, -2) * d.q(2, 2, -1),
              neg(d.p(2) * d.p(4) * d.q(1, 1) * d.q(2, -2) * d.q(1, 3, -1) * d.q(2, 2, -1)),
              neg(d.p(2, 2) * d.q(1, 5) * d.q(2, -2) * d.q(1, 3, -1) * d.q(2, 4, -1)),
              d.p(2, 2) * d.q(2, -2) * d.q(2, 4, -1)});
}

/// sl(1|2) gradings, homogeneous N=2, counts {2,1}: T_2^1 (row) and T_1^2 (column).
inline TermSum display_appc_row(const ParamLayout& lay) {
  const Display d{lay};
  return sum({neg(d.p(-3) * d.p(1) * d.q(1, 2) * d.q(2, -1) * d.q(1, -2, -1) * d.q(2, 1, -1)),
              d.p(-3) * d.p(1) * d.q(1, 0) * d.q(2, -1) * d.q(1, -2, -1) * d.q(2, 1, -1),
              d.p(-1) * d.p(1) * d.q(1, 2) * d.q(2, -3) * d.q(1, -2, -1) * d.q(2, 1, -1),
              neg(d.p(-1) * d.p(1) * d.q(1, 0) * d.q(2, -3) * d.q(1, -2, -1) * d.q(2, 1, -1))});
}

inline TermSum display_appc_col(const ParamLayout& lay) {
  const Display d{lay};
  return sum({d.p(-3) * d.q(1, 2) * d.q(1, -2, -1),
              neg(d.p(-1) * d.q(1, 2) * d.q(2, -3) * d.q(1, -2, -1) * d.q(2, -1, -1)),
              d.p(-1) * d.q(1, 2) * d.q(2, -3) * d.q(1, 0, -1) * d.q(2, -1, -1),
              neg(d.p(1) * d.q(1, 2) * d.q(2, -3) * d.q(1, 0, -1) * d.q(2, 1, -1)),
              d.p(1) * d.q(2, -3) * d.q(2, 1, -1)});
}

inline TermSum display_appd_row(const ParamLayout& lay) {
  const Display d{lay};
  return sum({d.p(-3) * d.p(1) * d.q(2, 1) * d.q(2, -1, -1),
              neg(d.p(-3) * d.p(1) * d.q(1, 0) * d.q(2, 1) * d.q(1, -2, -1) * d.q(2, -1, -1)),
              neg(d.p(-1) * d.p(1) * d.q(1, -4) * d.q(2, 1) * d.q(1, -2, -1) * d.q(2, -3, -1)),
              d.p(-1) * d.p(1) * d.q(2, 1) * d.q(2, -3, -1)});
}

inline TermSum display_appd_col(const ParamLayout& lay) {
  const Display d{lay};
  return sum({d.p(-3) * d.q(1, 2) * d.q(1, -2, -1),
              d.p(-1) * d.q(1, -4) * d.q(1, 2) * d.q(2, -1) * d.q(1, -2, -1) * d.q(1, 0, -1) * d.q(2, -3, -1),
              neg(d.p(-1) * d.q(1, 2) * d.q(2, -1) * d.q(1, 0, -1) * d.q(2, -3, -1)),
              d.p(1) * d.q(1, -4) * d.q(2, 1) * d.q(1, 0, -1) * d.q(2, -3, -1),
              neg(d.p(1) * d.q(1, -2) * d.q(2, 1) * d.q(1, 0, -1) * d.q(2, -3, -1))});
}

}  // namespace superbethe::fixtures
