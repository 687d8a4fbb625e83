#include <doctest.h>

#include <cmath>

#include "galois/analysis.hpp"
#include "galois/dist.hpp"

using namespace galois::analysis;

TEST_CASE("clt_curve") {
  const auto curve = clt_curve(2, {16, 64});
  REQUIRE(curve.rows.size() == 2);
  const double d16 = curve.rows[0][2], d64 = curve.rows[1][2];
  CHECK(d64 < d16);
  CHECK(d64 < 0.05);

  // standardization variance at (10, 3) is 250/9
  const auto mom = galois::dist::closed_form_moments(10, 3);
  CHECK(mom.variance == mpq_class(250, 9));

  CHECK_THROWS_AS(clt_curve(1, {16}), std::domain_error);
}

TEST_CASE("llt_curve") {
  const auto curve = llt_curve({2}, {16, 32, 64});
  REQUIRE(curve.rows.size() == 3);
  // exact and approximate variants both shrink along n; the approximate
  // variant carries an extra O(n^{-1/2}) mean-shift term, so it converges
  // more slowly but still monotonically
  CHECK(curve.rows[1][2] < curve.rows[0][2]);
  CHECK(curve.rows[2][2] < curve.rows[1][2]);
  CHECK(curve.rows[1][3] < curve.rows[0][3]);
  CHECK(curve.rows[2][3] < curve.rows[1][3]);
  CHECK(galois::dist::llt_residual(32, 10) < 0.02);
}

TEST_CASE("tv_curve") {
  const auto curve = tv_curve(2, {2, 4});
  REQUIRE(curve.rows.size() == 2);
  CHECK(curve.rows[0][1] == doctest::Approx(0.25));   // tv at m=2
  CHECK(curve.rows[0][2] == doctest::Approx(0.5));    // bound at m=2
  CHECK(curve.rows[1][2] == doctest::Approx(0.25));   // bound at (2,4)
  for (const auto& row : curve.rows) CHECK(row[1] <= row[2]);
}

TEST_CASE("cf_probe") {
  CHECK_THROWS_AS(cf_probe(1, 2), std::domain_error);
  CHECK_THROWS_AS(cf_probe(4, 4, 8), std::domain_error);

  // (n,m) = (2,2): |phi(pi)| = 1/2, so -log|phi|/n = log(2)/2 bounds the
  // large-regime minimum from above
  const auto p22 = cf_probe(2, 2);
  CHECK(p22.c_hat_large > 0);
  CHECK(p22.c_hat_large <= std::log(2.0) / 2 + 1e-12);

  for (unsigned n : {8u, 16u}) {
    const auto probe = cf_probe(n, 2);
    CHECK(probe.c_hat_small > 0.005);
    CHECK(probe.c_hat_large > 0.005);
  }
}

TEST_CASE("ferrers_joint_check") {
  const auto rep = ferrers_joint_check(64, 20'000, 20120329);
  CHECK(std::abs(rep.corr) < 0.05);
  CHECK(std::abs(rep.area_mean_z) < 4);
  CHECK(std::abs(rep.height_mean_z) < 4);
  CHECK(std::abs(rep.height_var_z) < 4);
  CHECK_THROWS_AS(ferrers_joint_check(2, 20'000, 1), std::domain_error);
  CHECK_THROWS_AS(ferrers_joint_check(64, 10, 1), std::domain_error);
}

TEST_CASE("curve reports serialize deterministically") {
  const auto a = clt_curve(2, {16, 32});
  const auto b = clt_curve(2, {16, 32});
  CHECK(a.to_csv() == b.to_csv());
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_csv().find("n,m,kolmogorov") != std::string::npos);
  CHECK(a.to_json().find("\"columns\"") != std::string::npos);
}

TEST_CASE("chi-square utilities") {
  // uniform-on-{0,1} pmf vs a fair-coin histogram
  galois::dist::ExactPMF coin;
  coin.numerators = {1, 1};
  coin.denominator = 2;
  long df = 0;
  const double stat = chi_square_stat({5000, 5000}, coin, 10'000, &df);
  CHECK(df == 1);
  CHECK(stat == doctest::Approx(0.0));
  CHECK(chi_square_critical(1, 1e-3) == doctest::Approx(10.8276).epsilon(1e-3));
}
