#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace galois::qpoly {

using BigInt = mpz_class;

// Dense polynomial in q with nonnegative arbitrary-precision integer
// coefficients.  Canonical form: no trailing zero coefficients; the zero
// polynomial has an empty coefficient vector.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  explicit CoeffPoly(std::vector<BigInt> coeffs);

  static CoeffPoly constant(BigInt c);
  static CoeffPoly one() { return constant(1); }

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  // coefficient of q^i; zero beyond the degree
  const BigInt& coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt value_at_one() const;
  bool is_palindromic() const;

  CoeffPoly shifted(std::size_t k) const;  // multiply by q^k

  friend CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  bool operator==(const CoeffPoly&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Weak composition (k_1,...,k_m) of n = sum k_i into m >= 1 parts.
struct Composition {
  std::vector<unsigned> parts;

  explicit Composition(std::vector<unsigned> p);
  unsigned total() const;
  unsigned length() const { return static_cast<unsigned>(parts.size()); }
};

// [l]_q = 1 + q + ... + q^(l-1); zero polynomial for l = 0
CoeffPoly q_integer(unsigned l);

// [k]!_q = [1]_q [2]_q ... [k]_q
CoeffPoly q_factorial(unsigned k);

// Gaussian binomial coefficient; throws std::domain_error if k > n
CoeffPoly q_binomial(unsigned n, unsigned k);

// Gaussian multinomial coefficient over a weak composition
CoeffPoly q_multinomial(const Composition& c);

// Generalized Galois polynomial G_n^(m)(q) = sum of q-multinomials over all
// weak compositions of n into m parts.  Computed by the splitting recurrence
//   G_n^(m) = sum_j qbinom(n, j) G_{n-j}^(m-1),   G_n^(1) = 1.
CoeffPoly galois_poly(unsigned n, unsigned m);

// Direct summation over all compositions; exponential in m.  Retained as an
// independent route for cross-checks.
CoeffPoly galois_poly_by_compositions(unsigned n, unsigned m);

// Full table G[mm][nn] for 1 <= mm <= m, 0 <= nn <= n, one DP pass.
std::vector<std::vector<CoeffPoly>> galois_family(unsigned n, unsigned m);

// Horner evaluation at q = e^{i theta}
std::complex<double> eval_unit_circle(const CoeffPoly& p, double theta);

// {"n":..., "m":..., "coeffs":[decimal strings]}
std::string to_json(const CoeffPoly& p, unsigned n, unsigned m);

}  // namespace galois::qpoly
