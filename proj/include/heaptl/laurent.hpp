#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>

namespace heaptl {

using Int = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable v with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long constant) {
    if (constant != 0) coeffs_.emplace(0, constant);
  }
  explicit Laurent(Int constant) {
    if (constant != 0) coeffs_.emplace(0, std::move(constant));
  }

  static Laurent monomial(Int coeff, int exp) {
    Laurent p;
    if (coeff != 0) p.coeffs_.emplace(exp, std::move(coeff));
    return p;
  }
  static Laurent one() { return Laurent(1); }
  static Laurent v(int exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return *this == Laurent(1); }
  bool is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }

  Int coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  // Smallest/largest exponent with a nonzero coefficient; only valid when
  // the polynomial is nonzero.
  int min_exp() const { return coeffs_.begin()->first; }
  int max_exp() const { return coeffs_.rbegin()->first; }

  bool in_neg() const { return is_zero() || max_exp() <= 0; }        // Z[v^-1]
  bool in_strict_neg() const { return is_zero() || max_exp() <= -1; }  // v^-1 Z[v^-1]
  bool in_pos() const { return is_zero() || min_exp() >= 0; }        // Z[v]
  bool coeffs_nonnegative() const {
    for (const auto& [e, c] : coeffs_)
      if (c < 0) return false;
    return true;
  }

  Laurent& operator+=(const Laurent& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& other) { return *this = *this * other; }

  Laurent scaled(const Int& k) const {
    Laurent r;
    if (k == 0) return r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, c * k);
    return r;
  }
  Laurent shifted(int k) const {  // multiply by v^k
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
  }
  Laurent bar() const {  // v <-> v^-1
    Laurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  friend bool operator<(const Laurent& a, const Laurent& b) {
    return a.coeffs_ < b.coeffs_;
  }

  // Exact division: on success sets quot with num == den * quot and returns
  // true; returns false when num is not a multiple of den.
  static bool divide(const Laurent& num, const Laurent& den, Laurent& quot);

  const std::map<int, Int>& terms() const { return coeffs_; }

  // Rendered with exponents ascending, e.g. "3v^-2 + 1 + v^2".
  std::string str() const;

 private:
  void add_term(int exp, const Int& c) {
    if (c == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      coeffs_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<int, Int> coeffs_;
};

}  // namespace heaptl
