#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace legkh {

// Integer Laurent polynomial in q. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);

  void add(int exponent, std::int64_t coefficient);
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // q -> q^-1
  LaurentPoly mirrored() const;

  // e.g. "q^-1 + q - 2q^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace legkh
