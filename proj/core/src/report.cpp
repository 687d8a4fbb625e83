#include "galois/report.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "galois/analysis.hpp"
#include "galois/combinat.hpp"
#include "galois/dist.hpp"
#include "galois/qpoly.hpp"
#include "galois/sampler.hpp"

namespace galois::report {

namespace {

using dist::ExactPMF;
using dist::Rational;
using qpoly::BigInt;
using qpoly::CoeffPoly;

Rational make_rat(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

CoeffPoly inversion_histogram(unsigned n, int m) {
  std::vector<BigInt> hist(n * (n - 1) / 2 + 1, 0);
  combinat::WordEnumerator en(n, m);
  while (auto w = en.next()) {
    ++hist[combinat::inversions_naive(*w)];
  }
  return CoeffPoly(std::move(hist));
}

CriterionResult oracle_equivalence() {
  CriterionResult r{"1 oracle equivalence (Galois poly vs word enumeration)"};
  r.pass = true;
  std::ostringstream detail;
  auto check = [&](unsigned n, int m) {
    if (qpoly::galois_poly(n, m) != inversion_histogram(n, m)) {
      r.pass = false;
      detail << " mismatch at n=" << n << " m=" << m << ';';
    }
  };
  for (unsigned n = 1; n <= 7; ++n) {
    for (int m = 1; m <= 3; ++m) check(n, m);
  }
  for (unsigned n = 8; n <= 10; ++n) check(n, 2);
  r.detail = r.pass ? "exact match on every tested (n, m)" : detail.str();
  return r;
}

CriterionResult moments_and_normalization(bool check_normalization) {
  CriterionResult r;
  r.name = check_normalization
               ? "3 normalization G_n^(m)(1) = m^n"
               : "2 closed-form moments match exact PMF moments";
  r.pass = true;
  std::ostringstream detail;
  const auto family = qpoly::galois_family(40, 8);
  for (unsigned m = 2; m <= 8; ++m) {
    for (unsigned n = 2; n <= 40; ++n) {
      if (check_normalization) {
        BigInt mn;
        mpz_ui_pow_ui(mn.get_mpz_t(), m, n);
        if (family[m][n].value_at_one() != mn) {
          r.pass = false;
          detail << " n=" << n << " m=" << m << ';';
        }
      } else {
        const ExactPMF p = dist::pmf_from_coeffs(family[m][n].coeffs(), n, m);
        const auto got = dist::moments_from_pmf(p);
        const auto want = dist::closed_form_moments(n, m);
        if (got.mean != want.mean || got.variance != want.variance) {
          r.pass = false;
          detail << " n=" << n << " m=" << m << ';';
        }
      }
    }
  }
  r.detail = r.pass ? "exact over 2<=n<=40, 2<=m<=8" : detail.str();
  return r;
}

CriterionResult tv_bound_and_trend() {
  CriterionResult r{"4 TV distance to permutation limit: bound and m-trend"};
  r.pass = true;
  std::ostringstream detail;
  std::map<std::pair<unsigned, unsigned>, Rational> tv;
  for (unsigned n = 2; n <= 6; ++n) {
    const ExactPMF perm = dist::permutation_inversion_pmf(n);
    for (unsigned m = 2; m <= 50; ++m) {
      const Rational d = dist::tv_distance(dist::exact_pmf(n, m), perm);
      tv[{n, m}] = d;
      if (d > dist::tv_bound(n, m)) {
        r.pass = false;
        detail << " bound violated at n=" << n << " m=" << m << ';';
      }
    }
  }
  for (unsigned n = 3; n <= 5; ++n) {
    if (!(tv[{n, 50}] < tv[{n, 5}])) {
      r.pass = false;
      detail << " no m-trend at n=" << n << ';';
    }
  }
  r.detail = r.pass ? "TV <= 1-(m)_n/m^n on 2<=n<=6, 2<=m<=50; m=50 < m=5"
                    : detail.str();
  return r;
}

CriterionResult clt_distances() {
  CriterionResult r{"5 CLT: Kolmogorov distance decreasing in n, < 0.05 at (64,2)"};
  r.pass = true;
  std::ostringstream detail;
  for (unsigned m : {2u, 3u, 10u}) {
    const auto curve = analysis::clt_curve(m, {16, 32, 64});
    const double d16 = curve.rows[0][2], d32 = curve.rows[1][2],
                 d64 = curve.rows[2][2];
    if (!(d64 < d32 && d32 < d16)) {
      r.pass = false;
      detail << " not decreasing at m=" << m << ';';
    }
    if (m == 2 && !(d64 < 0.05)) {
      r.pass = false;
      detail << " (64,2) distance " << d64 << " >= 0.05;";
    }
  }
  r.detail = r.pass ? "decreasing along n in {16,32,64} for m in {2,3,10}"
                    : detail.str();
  return r;
}

CriterionResult llt_residuals() {
  CriterionResult r{"6 LLT: residual decreasing in n, < 0.01 at n=64"};
  r.pass = true;
  std::ostringstream detail;
  for (unsigned m : {2u, 3u, 10u}) {
    for (bool approx : {false, true}) {
      const double r16 = dist::llt_residual(16, m, approx);
      const double r32 = dist::llt_residual(32, m, approx);
      const double r64 = dist::llt_residual(64, m, approx);
      if (!(r64 < r32 && r32 < r16)) {
        r.pass = false;
        detail << " not decreasing at m=" << m << (approx ? " (approx)" : "")
               << ';';
      }
      if (!approx && !(r64 < 0.01)) {
        r.pass = false;
        detail << " residual(64," << m << ")=" << r64 << " >= 0.01;";
      }
    }
  }
  r.detail = r.pass ? "monotone for exact and approximate moments" : detail.str();
  return r;
}

CriterionResult bijections() {
  CriterionResult r{"7 path/Ferrers bijections and area identities"};
  r.pass = true;
  std::ostringstream detail;
  for (unsigned n = 0; n <= 12; ++n) {
    const CoeffPoly g = qpoly::galois_poly(n, 2);
    std::vector<BigInt> area_hist(g.size(), 0);
    std::vector<BigInt> height_hist(n + 1, 0);
    combinat::WordEnumerator en(n, 2);
    bool ok = true;
    while (auto w = en.next()) {
      const auto p = combinat::word_to_path(*w);
      const auto f = combinat::path_to_ferrers(p);
      ok = ok && combinat::path_to_word(p).letters == w->letters;
      ok = ok && combinat::to_string(combinat::ferrers_to_path(f)) ==
                     combinat::to_string(p);
      ok = ok && combinat::area_under(p) == combinat::inversions_naive(*w);
      ok = ok && f.area() == combinat::area_left(p) + static_cast<long>(n) + 1;
      ok = ok && f.semiperimeter() == static_cast<long>(n) + 2;
      ++area_hist[combinat::area_under(p)];
      ++height_hist[f.height() - 1];
    }
    if (!ok) {
      r.pass = false;
      detail << " identity failure at n=" << n << ';';
    }
    if (CoeffPoly(std::move(area_hist)) != g) {
      r.pass = false;
      detail << " area histogram mismatch at n=" << n << ';';
    }
    // height - 1 ~ Bin(n, 1/2)
    for (unsigned k = 0; k <= n; ++k) {
      BigInt b;
      mpz_bin_uiui(b.get_mpz_t(), n, k);
      if (height_hist[k] != b) {
        r.pass = false;
        detail << " height histogram mismatch at n=" << n << ';';
        break;
      }
    }
  }
  // exact Ferrers area moments from the shifted PMF
  for (unsigned n = 2; n <= 20; ++n) {
    const auto mom = dist::moments_from_pmf(dist::exact_pmf(n, 2));
    const mpz_class N = n;
    const Rational area_mean = mom.mean + N + 1;
    const Rational want_mean = make_rat(N * N + 7 * N + 8, 8);
    const Rational want_var = make_rat(N * (N - 1) * (2 * N + 5), 96);
    if (area_mean != want_mean || mom.variance != want_var) {
      r.pass = false;
      detail << " Ferrers moments mismatch at n=" << n << ';';
    }
  }
  r.detail = r.pass ? "exhaustive n<=12; exact area moments n<=20" : detail.str();
  return r;
}

CriterionResult construction_equivalence(std::uint64_t seed) {
  CriterionResult r{"8 construction equivalence: chi-square GoF at (6,2)"};
  r.pass = true;
  const unsigned n = 6;
  const int m = 2;
  const unsigned reps = 100'000;
  const ExactPMF pmf = dist::exact_pmf(n, m);
  const std::size_t sup = pmf.support_size();
  std::vector<long> word_hist(sup, 0), u_hist(sup, 0), ferrers_hist(sup, 0);
  for (unsigned rep = 0; rep < reps; ++rep) {
    sampler::SampleStream s1(seed, rep);
    ++word_hist[combinat::inversions(sampler::sample_word(n, m, s1))];
    sampler::SampleStream s2(seed + 1, rep);
    const auto pairs = sampler::sample_upairs(n, m, s2);
    ++u_hist[sampler::u_statistic(pairs)];
    sampler::SampleStream s3(seed + 2, rep);
    ++ferrers_hist[sampler::sample_ferrers(n, s3).area - (n + 1)];
  }
  std::ostringstream detail;
  detail.precision(4);
  for (const auto& [label, hist] :
       {std::pair{"word", &word_hist}, {"u-statistic", &u_hist},
        {"ferrers", &ferrers_hist}}) {
    long df = 0;
    const double stat = analysis::chi_square_stat(*hist, pmf, reps, &df);
    const double crit = analysis::chi_square_critical(df, 1e-3);
    detail << ' ' << label << " chi2=" << stat << " crit=" << crit << ';';
    if (stat >= crit) r.pass = false;
  }
  r.detail = detail.str();
  return r;
}

CriterionResult hoeffding(std::uint64_t seed) {
  CriterionResult r{"9 Hoeffding decomposition variances and exact identity"};
  r.pass = true;
  std::ostringstream detail;
  detail.precision(4);
  const int m = 4;
  const unsigned draws = 1'000'000;

  // Var(xi) against (m^2-1)/(36 m^2)
  {
    sampler::SampleStream s(seed, 101);
    double sum = 0, sum2 = 0;
    std::vector<double> xs(draws);
    for (auto& v : xs) {
      v = sampler::hoeffding_xi(s.uniform_letter(m), s.uniform_unit(), m);
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / draws;
    const double var = sum2 / draws - mean * mean;
    double m4 = 0;
    for (double v : xs) m4 += std::pow(v - mean, 4);
    m4 /= draws;
    const double se = std::sqrt((m4 - var * var) / draws);
    const double want = (m * m - 1) / (36.0 * m * m);
    const double z = (var - want) / se;
    detail << " Var(xi) z=" << z << ';';
    if (std::abs(z) > 3) r.pass = false;
  }

  // Var(eta*) against (7/36)(1 - 1/m^2); eta* = I* - mu - xi_i - xi_j
  {
    sampler::SampleStream s(seed, 102);
    const double mu = (m - 1) / (2.0 * m);
    double sum = 0, sum2 = 0;
    std::vector<double> es(draws);
    for (auto& v : es) {
      const int x1 = s.uniform_letter(m), x2 = s.uniform_letter(m);
      const double y1 = s.uniform_unit(), y2 = s.uniform_unit();
      const double istar = (x1 > x2 && y1 < y2 ? 1.0 : 0.0) +
                           (x2 > x1 && y2 < y1 ? 1.0 : 0.0);
      v = istar - mu - sampler::hoeffding_xi(x1, y1, m) -
          sampler::hoeffding_xi(x2, y2, m);
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / draws;
    const double var = sum2 / draws - mean * mean;
    double m4 = 0;
    for (double v : es) m4 += std::pow(v - mean, 4);
    m4 /= draws;
    const double se = std::sqrt((m4 - var * var) / draws);
    const double want = (7.0 / 36.0) * (1.0 - 1.0 / (m * m));
    const double z = (var - want) / se;
    detail << " Var(eta*) z=" << z << ';';
    if (std::abs(z) > 3) r.pass = false;
  }

  // exact identity: n(n-1)(n+1)/36 a + n(n-1)/24 a = n(n-1)(2n+5)/72 a
  for (unsigned n = 2; n <= 100; ++n) {
    for (unsigned mm = 2; mm <= 10; ++mm) {
      const mpz_class N = n, M = mm;
      const Rational a = make_rat(M * M - 1, M * M);
      const Rational lhs = make_rat(N * (N - 1) * (N + 1), 36) * a +
                           make_rat(N * (N - 1), 24) * a;
      const Rational rhs = make_rat(N * (N - 1) * (2 * N + 5), 72) * a;
      if (lhs != rhs || rhs != dist::closed_form_moments(n, mm).variance) {
        r.pass = false;
        detail << " identity failed at n=" << n << " m=" << mm << ';';
      }
    }
  }
  r.detail = detail.str();
  return r;
}

CriterionResult cf_floors() {
  CriterionResult r{"10 characteristic-function decay floors"};
  r.pass = true;
  std::ostringstream detail;
  detail.precision(4);
  for (unsigned n : {8u, 16u, 32u}) {
    for (unsigned m : {2u, 3u}) {
      const auto probe = analysis::cf_probe(n, m);
      detail << " (n=" << n << ",m=" << m << ") small=" << probe.c_hat_small
             << " large=" << probe.c_hat_large << ';';
      if (!(probe.c_hat_small > 0.005 && probe.c_hat_large > 0.005)) {
        r.pass = false;
      }
    }
  }
  r.detail = detail.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t master_seed) {
  std::vector<CriterionResult> results;
  results.push_back(oracle_equivalence());
  results.push_back(moments_and_normalization(false));
  results.push_back(moments_and_normalization(true));
  results.push_back(tv_bound_and_trend());
  results.push_back(clt_distances());
  results.push_back(llt_residuals());
  results.push_back(bijections());
  results.push_back(construction_equivalence(master_seed));
  results.push_back(hoeffding(master_seed));
  results.push_back(cf_floors());
  return results;
}

}  // namespace galois::report
