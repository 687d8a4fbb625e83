#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "galois/combinat.hpp"
#include "galois/qpoly.hpp"

using namespace galois::qpoly;

namespace {

CoeffPoly from_ints(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return CoeffPoly(std::move(v));
}

// independent oracle: histogram of inversion counts over all words with the
// given letter multiplicities (or over all words of length n when
// enumerating the full alphabet)
CoeffPoly histogram_for_composition(const Composition& c) {
  const unsigned n = c.total();
  const int m = static_cast<int>(c.length());
  std::vector<BigInt> hist(n * (n - 1) / 2 + 1, 0);
  galois::combinat::WordEnumerator en(n, m);
  while (auto w = en.next()) {
    std::vector<unsigned> counts(c.length(), 0);
    for (int x : w->letters) ++counts[x - 1];
    if (counts == c.parts) ++hist[galois::combinat::inversions_naive(*w)];
  }
  return CoeffPoly(std::move(hist));
}

}  // namespace

TEST_CASE("q_integer") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(1) == CoeffPoly::one());
  CHECK(q_integer(3) == from_ints({1, 1, 1}));
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0) == CoeffPoly::one());
  CHECK(q_factorial(2) == from_ints({1, 1}));
  // inversion histogram over the 6 permutations of {1,2,3}
  CHECK(q_factorial(3) == from_ints({1, 2, 2, 1}));
}

TEST_CASE("q_binomial examples") {
  CHECK(q_binomial(4, 2) == from_ints({1, 1, 2, 1, 1}));
  CHECK(q_binomial(7, 0) == CoeffPoly::one());
  CHECK(q_binomial(3, 1) == q_integer(3));
  CHECK_THROWS_AS(q_binomial(3, 4), std::domain_error);
}

TEST_CASE("q_binomial structure") {
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const CoeffPoly b = q_binomial(n, k);
      CHECK(b.degree() == static_cast<long>(k * (n - k)));
      CHECK(b.is_palindromic());
      BigInt want;
      mpz_bin_uiui(want.get_mpz_t(), n, k);
      CHECK(b.value_at_one() == want);
      for (const auto& c : b.coeffs()) CHECK(c > 0);
      // Pascal-type recurrence
      if (n > 0 && k > 0 && k < n) {
        CHECK(b == q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(k));
      }
    }
  }
}

TEST_CASE("q_multinomial examples and oracle") {
  CHECK(q_multinomial(Composition({1, 1, 1})) == q_factorial(3));
  CHECK(q_multinomial(Composition({5, 0, 0, 0})) == CoeffPoly::one());
  CHECK(q_multinomial(Composition({2, 2})) == q_binomial(4, 2));

  // brute-force inversion histograms, all compositions with n <= 6, m <= 3
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned k1 = 0; k1 <= n; ++k1) {
      for (unsigned k2 = 0; k2 + k1 <= n; ++k2) {
        const Composition c({k1, k2, n - k1 - k2});
        CHECK(q_multinomial(c) == histogram_for_composition(c));
      }
    }
  }
}

TEST_CASE("q_multinomial degree and palindromicity") {
  for (unsigned k1 = 0; k1 <= 4; ++k1) {
    for (unsigned k2 = 0; k2 <= 4; ++k2) {
      for (unsigned k3 = 0; k3 <= 3; ++k3) {
        const Composition c({k1, k2, k3});
        const unsigned n = k1 + k2 + k3;
        const CoeffPoly p = q_multinomial(c);
        const long e2 = (static_cast<long>(n) * n -
                         (static_cast<long>(k1) * k1 + k2 * k2 + k3 * k3)) / 2;
        CHECK(p.degree() == e2);
        CHECK(p.is_palindromic());
        for (const auto& coef : p.coeffs()) CHECK(coef > 0);
      }
    }
  }
}

TEST_CASE("galois_poly examples") {
  CHECK(galois_poly(2, 2) == from_ints({3, 1}));
  CHECK(galois_poly(3, 2) == from_ints({4, 2, 2}));
  CHECK(galois_poly(2, 3) == from_ints({6, 3}));
  CHECK(galois_poly(0, 5) == CoeffPoly::one());
  CHECK(galois_poly(7, 1) == CoeffPoly::one());
}

TEST_CASE("galois_poly: recurrence route equals composition summation") {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned m = 1; m <= 4; ++m) {
      CHECK(galois_poly(n, m) == galois_poly_by_compositions(n, m));
    }
  }
}

TEST_CASE("galois_poly: value at 1 and degree formula") {
  for (unsigned n = 0; n <= 40; ++n) {
    for (unsigned m = 1; m <= 8; ++m) {
      const CoeffPoly g = galois_poly(n, m);
      BigInt mn;
      mpz_ui_pow_ui(mn.get_mpz_t(), m, n);
      CHECK(g.value_at_one() == mn);
      // gap-free positive support
      for (const auto& c : g.coeffs()) CHECK(c > 0);
      // balanced-composition degree formula
      const long r = n % m;
      const long hi = (n + m - 1) / m, lo = n / m;
      const long deg = (static_cast<long>(n) * n - r * hi * hi -
                        (m - r) * lo * lo) / 2;
      CHECK(g.degree() == deg);
    }
  }
}

TEST_CASE("eval_unit_circle") {
  const CoeffPoly g = galois_poly(2, 2);
  const auto v = eval_unit_circle(g, std::numbers::pi);
  CHECK(std::abs(v - std::complex<double>(2, 0)) < 1e-12);
  CHECK(std::abs(eval_unit_circle(from_ints({1, 1}), std::numbers::pi)) < 1e-12);
  // theta = 0 gives the coefficient sum; |value| bounded by p(1)
  for (unsigned n : {3u, 5u, 8u}) {
    const CoeffPoly p = galois_poly(n, 3);
    const double at_one = p.value_at_one().get_d();
    CHECK(std::abs(eval_unit_circle(p, 0.0).real() - at_one) < 1e-9 * at_one);
    for (double theta = -3.0; theta <= 3.0; theta += 0.37) {
      CHECK(std::abs(eval_unit_circle(p, theta)) <= at_one * (1 + 1e-12));
    }
  }
}

TEST_CASE("polynomial json") {
  CHECK(to_json(galois_poly(2, 2), 2, 2) ==
        R"({"n":2,"m":2,"coeffs":["3","1"]})");
}
