#pragma once

#include <map>
#include <string>

namespace lzpath {

// Sparse integer Laurent polynomial in q; no zero coefficients stored.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;

  static LaurentPolynomial q_power(long long k) {
    LaurentPolynomial p;
    p.coeffs_[k] = 1;
    return p;
  }
  static LaurentPolynomial constant(long long c) {
    LaurentPolynomial p;
    if (c != 0) p.coeffs_[0] = c;
    return p;
  }

  const std::map<long long, long long>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long long coefficient(long long k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? 0 : it->second;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
  }
  LaurentPolynomial operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    return r += o;
  }
  LaurentPolynomial operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [k1, c1] : coeffs_)
      for (const auto& [k2, c2] : o.coeffs_) r.add_term(k1 + k2, c1 * c2);
    return r;
  }
  // multiply by q^k
  LaurentPolynomial shifted(long long k) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
  }
  // substitute q -> q^{-1}
  LaurentPolynomial inverted() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
  }

  bool operator==(const LaurentPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  // ascending exponents: "q^-1", "1 + 2q + q^3", "0"
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      long long a = c;
      if (first) {
        if (a < 0) {
          s += "-";
          a = -a;
        }
      } else {
        s += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      if (e == 0) {
        s += std::to_string(a);
      } else {
        if (a != 1) s += std::to_string(a);
        s += e == 1 ? "q" : "q^" + std::to_string(e);
      }
      first = false;
    }
    return s;
  }

private:
  void add_term(long long k, long long c) {
    long long v = coeffs_[k] + c;
    if (v == 0)
      coeffs_.erase(k);
    else
      coeffs_[k] = v;
  }

  std::map<long long, long long> coeffs_;
};

}  // namespace lzpath
