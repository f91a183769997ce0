#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heckekit {

using Integer = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in one variable, stored as exponent-sorted
/// (exponent, coefficient) pairs with no zero coefficients.
///
/// The same type serves for polynomials in v (Hecke coefficients), q
/// (Kostant partitions, P_{λ,μ}) and t (Whittaker traces); only the variable
/// name used for printing differs.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Integer constant);

  static LaurentPoly monomial(Integer coeff, int exponent);
  static LaurentPoly variable(int exponent = 1) { return monomial(1, exponent); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(int exponent) const;
  /// Lowest / highest exponent. Precondition: non-zero.
  int min_degree() const { return terms_.front().first; }
  int max_degree() const { return terms_.back().first; }

  /// True iff the polynomial is ±x^k.
  bool is_unit() const;
  bool has_nonnegative_coefficients() const;
  bool is_polynomial() const { return is_zero() || min_degree() >= 0; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  /// Adds coeff * x^k in place.
  void add_term(const Integer& coeff, int exponent);
  /// x ↦ x^{-1}.
  LaurentPoly bar() const;
  /// x ↦ x^k, k != 0.
  LaurentPoly substitute_power(int k) const;
  /// x ↦ x^{1/k}. Throws DomainError if some exponent is not divisible by k.
  LaurentPoly contract_power(int k) const;
  Integer at_one() const;
  /// Evaluation at an integer point; requires x != 0 when negative exponents are present.
  Integer evaluate(const Integer& x) const;

  /// "v^-2 + 1 + 3*v^4": ascending exponents, explicit signs, "0" for zero.
  std::string to_string(std::string_view var = "v") const;
  static LaurentPoly parse(std::string_view text, std::string_view var = "v");

 private:
  std::vector<Term> terms_;
};

}  // namespace heckekit
