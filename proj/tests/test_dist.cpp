#include <doctest.h>

#include <cmath>

#include "galois/dist.hpp"
#include "galois/qpoly.hpp"

using namespace galois::dist;

namespace {
Rational rat(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("exact_pmf examples") {
  const ExactPMF p22 = exact_pmf(2, 2);
  CHECK(p22.denominator == 4);
  CHECK(p22.prob(0) == rat(3, 4));
  CHECK(p22.prob(1) == rat(1, 4));
  CHECK(p22.is_normalized());

  const ExactPMF p1 = exact_pmf(1, 7);
  CHECK(p1.support_size() == 1);
  CHECK(p1.prob(0) == 1);

  const ExactPMF p32 = exact_pmf(3, 2);
  CHECK(p32.prob(0) == rat(1, 2));
  CHECK(p32.prob(1) == rat(1, 4));
  CHECK(p32.prob(2) == rat(1, 4));
}

TEST_CASE("exact_pmf normalization over a range") {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned m = 1; m <= 6; ++m) {
      CHECK(exact_pmf(n, m).is_normalized());
    }
  }
}

TEST_CASE("closed_form_moments") {
  const auto m22 = closed_form_moments(2, 2);
  CHECK(m22.mean == rat(1, 4));
  CHECK(m22.variance == rat(3, 16));
  const auto m15 = closed_form_moments(1, 5);
  CHECK(m15.mean == 0);
  CHECK(m15.variance == 0);
  const auto m32 = closed_form_moments(3, 2);
  CHECK(m32.mean == rat(3, 4));
  CHECK(m32.variance == rat(11, 16));
}

TEST_CASE("moments_from_pmf agrees with closed form") {
  const auto got = moments_from_pmf(exact_pmf(2, 2));
  CHECK(got.mean == rat(1, 4));
  CHECK(got.variance == rat(3, 16));

  ExactPMF point;
  point.numerators = {1};
  point.denominator = 1;
  const auto pm = moments_from_pmf(point);
  CHECK(pm.mean == 0);
  CHECK(pm.variance == 0);

  for (unsigned n = 0; n <= 16; ++n) {
    for (unsigned m = 2; m <= 5; ++m) {
      const auto emp = moments_from_pmf(exact_pmf(n, m));
      const auto cf = closed_form_moments(n, m);
      CHECK(emp.mean == cf.mean);
      CHECK(emp.variance == cf.variance);
    }
  }
}

TEST_CASE("permutation_inversion_pmf") {
  const ExactPMF p1 = permutation_inversion_pmf(1);
  CHECK(p1.support_size() == 1);
  CHECK(p1.prob(0) == 1);
  const ExactPMF p2 = permutation_inversion_pmf(2);
  CHECK(p2.prob(0) == rat(1, 2));
  CHECK(p2.prob(1) == rat(1, 2));
  const ExactPMF p3 = permutation_inversion_pmf(3);
  CHECK(p3.prob(0) == rat(1, 6));
  CHECK(p3.prob(1) == rat(1, 3));
  CHECK(p3.prob(2) == rat(1, 3));
  CHECK(p3.prob(3) == rat(1, 6));
  CHECK(p3.is_normalized());
}

TEST_CASE("tv_distance") {
  const ExactPMF p = exact_pmf(2, 2);
  CHECK(tv_distance(p, p) == 0);
  CHECK(tv_distance(p, permutation_inversion_pmf(2)) == rat(1, 4));

  ExactPMF at0, at1;
  at0.numerators = {1};
  at0.denominator = 1;
  at1.numerators = {0, 1};
  at1.denominator = 1;
  CHECK(tv_distance(at0, at1) == 1);
  CHECK(tv_distance(at1, at0) == 1);  // symmetry
}

TEST_CASE("tv_bound") {
  CHECK(tv_bound(2, 4) == rat(1, 4));
  CHECK(tv_bound(2, 2) == rat(1, 2));
  CHECK(tv_bound(3, 2) == 1);
  // bound dominates the distance on a small grid
  for (unsigned n = 2; n <= 5; ++n) {
    const ExactPMF perm = permutation_inversion_pmf(n);
    for (unsigned m = 2; m <= 12; ++m) {
      CHECK(tv_distance(exact_pmf(n, m), perm) <= tv_bound(n, m));
    }
  }
}

TEST_CASE("tv distance shrinks toward the permutation limit") {
  for (unsigned n = 3; n <= 5; ++n) {
    const ExactPMF perm = permutation_inversion_pmf(n);
    CHECK(tv_distance(exact_pmf(n, 50), perm) <
          tv_distance(exact_pmf(n, 5), perm));
  }
}

TEST_CASE("llt_residual") {
  CHECK_THROWS_AS(llt_residual(1, 2), std::domain_error);
  CHECK_THROWS_AS(llt_residual(5, 1), std::domain_error);
  const double r16 = llt_residual(16, 2);
  const double r64 = llt_residual(64, 2);
  CHECK(r16 < 0.02);  // frozen after a pilot run of the exact engine
  CHECK(r64 < r16);
  // approximate-moment variant is finite and also small at n=64
  CHECK(llt_residual(64, 2, true) < 0.05);
}

TEST_CASE("kolmogorov_distance_to_normal") {
  ExactPMF point;
  point.numerators = {1};
  point.denominator = 1;
  CHECK_THROWS_AS(kolmogorov_distance_to_normal(point, 0.0, 0.0),
                  std::domain_error);
  // point mass at 0 vs N(0,1): gap 1 - Phi(1/2) at the k=0 boundary
  CHECK(kolmogorov_distance_to_normal(point, 0.0, 1.0) ==
        doctest::Approx(1 - normal_cdf(0.5)).epsilon(1e-12));
  CHECK(1 - normal_cdf(0.5) == doctest::Approx(0.3085).epsilon(1e-3));

  auto dist_at = [](unsigned n) {
    const auto mom = closed_form_moments(n, 2);
    return kolmogorov_distance_to_normal(exact_pmf(n, 2), mom.mean.get_d(),
                                         std::sqrt(mom.variance.get_d()));
  };
  CHECK(dist_at(64) < 0.05);
  CHECK(dist_at(64) < dist_at(16));
}

TEST_CASE("pmf json") {
  CHECK(to_json(exact_pmf(1, 5), 1, 5) ==
        R"({"n":1,"m":5,"denominator":"5","numerators":["5"]})");
}
