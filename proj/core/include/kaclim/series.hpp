#ifndef KACLIM_SERIES_HPP
#define KACLIM_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "kaclim/poset.hpp"
#include "kaclim/rational.hpp"

namespace kaclim {

/// Integer-coefficient polynomial in t; c[i] is the coefficient of t^i.
struct Poly {
  std::vector<Int> c;

  static Poly zero() { return {}; }
  static Poly one() { return {{Int(1)}}; }
  static Poly monomial(int power, Int coeff = 1);

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const;
  void trim();

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  bool operator==(const Poly& rhs) const;

  /// Multiplies by (1 - t^k).
  Poly times_one_minus(int k) const;
  /// Exact division by (1 - t^k), when possible.
  std::optional<Poly> divided_by_one_minus(int k) const;
};

/// Exact rational function: integer numerator over a multiset of (1 - t^k)
/// factors. Kept unreduced; canonicalization happens only for display.
struct PoincareSeries {
  Poly num;
  std::vector<int> denom;  // sorted multiset of exponents k

  static PoincareSeries zero() { return {Poly::zero(), {}}; }
  static PoincareSeries one_over(std::vector<int> factors);

  PoincareSeries operator+(const PoincareSeries& rhs) const;
  PoincareSeries operator-(const PoincareSeries& rhs) const;
  PoincareSeries operator-() const;
  /// Multiplies by t^power.
  PoincareSeries shifted(int power) const;

  /// Coefficients of t^0 .. t^n.
  std::vector<Int> expand(int n) const;
  bool is_zero() const;  // exact, via the numerator
  /// Cancels (1 - t^k) factors dividing the numerator exactly.
  PoincareSeries canonical() const;
  std::string to_string() const;
};

/// Alternating sum over strict chains of the series at the chain minimum.
PoincareSeries euler_characteristic_series(const FinitePoset& poset,
                                           const std::vector<PoincareSeries>& per_element);

/// Greedily matches coefficients with a product of 1/(1 - t^k) factors;
/// empty result means the constant series 1.
std::optional<std::vector<int>> greedy_denominator_fit(const std::vector<Int>& coeffs);

}  // namespace kaclim

#endif
