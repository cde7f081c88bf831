#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weylkl {

// Univariate polynomial in q with exact int64 coefficients. Every
// arithmetic step is overflow-checked and throws std::overflow_error
// rather than wrapping. Normalized: no trailing zero coefficients, the
// zero polynomial stores nothing.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int64_t c);  // constant
  static Polynomial monomial(int64_t c, int exp);
  static Polynomial q() { return monomial(1, 1); }
  static Polynomial from_coeffs(std::vector<int64_t> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int64_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  const std::vector<int64_t>& coeffs() const { return c_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;

  Polynomial shifted(int k) const;  // * q^k
  Polynomial truncated(int maxdeg) const;
  // q^d * p(1/q); requires degree <= d.
  Polynomial reciprocal(int d) const;
  int64_t at_one() const;

  bool operator==(const Polynomial&) const = default;

  // Ascending powers: "0", "1", "q - 1", "1 + q + 2q^2".
  std::string str() const;

 private:
  void normalize();
  std::vector<int64_t> c_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

}  // namespace weylkl
