#include "weylkl/polynomial.hpp"

#include <stdexcept>

namespace weylkl {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in polynomial arithmetic");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in polynomial arithmetic");
  return r;
}

}  // namespace

Polynomial::Polynomial(int64_t c) {
  if (c != 0) c_.push_back(c);
}

Polynomial Polynomial::monomial(int64_t c, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Polynomial p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(exp) + 1, 0);
    p.c_[exp] = c;
  }
  return p;
}

Polynomial Polynomial::from_coeffs(std::vector<int64_t> coeffs) {
  Polynomial p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], checked_mul(-1, o.c_[i]));
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  c_ = std::move(r);
  normalize();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (int64_t& c : p.c_) c = checked_mul(-1, c);
  return p;
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero() || k == 0) return *this;
  Polynomial p;
  p.c_.assign(c_.size() + k, 0);
  for (size_t i = 0; i < c_.size(); ++i) p.c_[i + k] = c_[i];
  return p;
}

Polynomial Polynomial::truncated(int maxdeg) const {
  Polynomial p;
  if (maxdeg >= 0) {
    size_t keep = std::min(c_.size(), static_cast<size_t>(maxdeg) + 1);
    p.c_.assign(c_.begin(), c_.begin() + keep);
    p.normalize();
  }
  return p;
}

Polynomial Polynomial::reciprocal(int d) const {
  if (is_zero()) return {};
  if (degree() > d) throw std::invalid_argument("reciprocal: degree above d");
  Polynomial p;
  p.c_.assign(static_cast<size_t>(d) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) p.c_[d - i] = c_[i];
  p.normalize();
  return p;
}

int64_t Polynomial::at_one() const {
  int64_t s = 0;
  for (int64_t c : c_) s = checked_add(s, c);
  return s;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    int64_t c = c_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    uint64_t mag = c < 0 ? -static_cast<uint64_t>(c) : static_cast<uint64_t>(c);
    if (i == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += "q";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r *= b;
  return r;
}

}  // namespace weylkl
