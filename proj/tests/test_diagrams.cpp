#include <doctest.h>

#include "superbethe/diagrams.hpp"
#include "superbethe/error.hpp"
#include "superbethe/rng.hpp"

using namespace superbethe;

namespace {

// Every rows x cols placement checked cell by cell against lambda_i < j <= mu_i.
bool brute_rectangle(const std::vector<int>& lam, const std::vector<int>& mu, int rows, int cols) {
  const auto at = [](const std::vector<int>& p, int i) {
    return i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i - 1)] : 0;
  };
  for (int i1 = 1; i1 <= 10; ++i1) {
    for (int j1 = 1; j1 <= 10; ++j1) {
      bool ok = true;
      for (int i = i1; i < i1 + rows; ++i) {
        for (int j = j1; j < j1 + cols; ++j) ok = ok && at(lam, i) < j && j <= at(mu, i);
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{2, 2, 1}) == Partition{3, 2});
  CHECK(conjugate(Partition{5, 5, 4, 2, 1}) == Partition{5, 4, 3, 3, 2});
  CHECK(conjugate(Partition{}) == Partition{});
  Rng rng(7);
  for (int n = 0; n < 50; ++n) {
    const Partition p = random_partition(rng, 6, 6);
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).weight() == p.weight());
  }
}

TEST_CASE("partitions trim zeros and reject bad input") {
  CHECK(Partition{2, 2, 1, 0, 0} == Partition{2, 2, 1});
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(SkewShape(Partition{3}, Partition{2}), Error);
  CHECK(parse_partition("(5,4,3)") == Partition{5, 4, 3});
  CHECK(parse_partition("()") == Partition{});
  const SkewShape s = parse_skew_shape("3,2/1");
  CHECK(s.outer() == Partition{3, 2});
  CHECK(s.inner() == Partition{1});
  CHECK(s.cell_count() == 4);
  CHECK(s.to_string() == "3,2/1");
}

TEST_CASE("contains_rectangle") {
  CHECK(contains_rectangle(SkewShape(Partition{2, 2}), 2, 2));
  CHECK_FALSE(contains_rectangle(SkewShape(Partition{1}, Partition{2, 2}), 2, 2));
  CHECK(contains_rectangle(SkewShape(Partition{5, 5, 4, 2, 1}), 2, 4));
  CHECK(brute_rectangle({}, {5, 5, 4, 2, 1}, 2, 4));

  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const SkewShape s = random_skew_shape(rng, 5, 5);
    std::vector<int> lam(s.inner().parts().begin(), s.inner().parts().end());
    std::vector<int> mu(s.outer().parts().begin(), s.outer().parts().end());
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        const bool got = contains_rectangle(s, a, b);
        CHECK(got == brute_rectangle(lam, mu, a, b));
        if (got && a > 1) CHECK(contains_rectangle(s, a - 1, b));
        if (got && b > 1) CHECK(contains_rectangle(s, a, b - 1));
      }
    }
  }
}

TEST_CASE("kac_dynkin_covariant") {
  CHECK(kac_dynkin_covariant(Partition{1}, 1, 0) == std::vector<int>{1, 0});
  CHECK(kac_dynkin_covariant(Partition{5, 4, 3, 2, 2, 1}, 2, 1) == std::vector<int>{1, 1, 6, 1});
  CHECK(kac_dynkin_covariant(Partition{}, 2, 1) == std::vector<int>{0, 0, 0, 0});
  try {
    kac_dynkin_covariant(Partition{3, 3, 3}, 1, 0);
    FAIL("expected not_covariant_dominant");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_covariant_dominant);
  }
}

TEST_CASE("kac_dynkin_contravariant") {
  // r=1, s=0, mu=(1): xi_1 = max(1-1,0)=0, mu'_1 = 1 -> a_1 = 0, a_2 = -1
  CHECK(kac_dynkin_contravariant(Partition{1}, 1, 0) == std::vector<int>{0, -1});
  // r=0, s=1, mu=(3,1): xi_1 = 1; mu' = (2,1,1): a_1 = -1-1 = -2, a_2 = mu'_1-mu'_2 = 1
  CHECK(kac_dynkin_contravariant(Partition{3, 1}, 0, 1) == std::vector<int>{-2, 1});
  CHECK_THROWS_AS(kac_dynkin_contravariant(Partition{2, 2, 2}, 0, 0), Error);
}

TEST_CASE("rng draws are reproducible") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) {
    const auto v = a.uniform(-3, 9);
    CHECK(v == b.uniform(-3, 9));
    CHECK(v >= -3);
    CHECK(v <= 9);
  }
}
