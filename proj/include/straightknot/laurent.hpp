#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sk {

// Integer Laurent polynomial sum c_k x^k stored densely from min_exp().
// Coefficients are int64 with checked arithmetic; overflow throws.
class Laurent {
 public:
  Laurent() = default;
  Laurent(int offset, std::vector<int64_t> coeffs);

  static Laurent constant(int64_t c) { return monomial(c, 0); }
  static Laurent monomial(int64_t c, int e);

  bool is_zero() const { return c_.empty(); }
  int min_exp() const { return off_; }
  int max_exp() const { return off_ + static_cast<int>(c_.size()) - 1; }
  int64_t coeff(int e) const;
  int offset() const { return off_; }
  const std::vector<int64_t>& coeffs() const { return c_; }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent shifted(int k) const;
  // x -> x^k for nonzero k
  Laurent substitute(int k) const;
  // exact quotient; throws DomainError when o does not divide *this
  Laurent exact_div(const Laurent& o) const;
  Laurent pow(int k) const;

  int64_t eval_pm1(int sign) const;
  uint64_t eval_mod(uint64_t x, uint64_t xinv, uint64_t p) const;

  // "offset=-4; coeffs=[1,0,-1]"
  std::string serialize() const;
  static Laurent parse(const std::string& s);
  std::string pretty(const std::string& var = "t") const;

  bool operator==(const Laurent& o) const = default;
  std::strong_ordering operator<=>(const Laurent& o) const;

 private:
  void trim();
  int off_ = 0;
  std::vector<int64_t> c_;
};

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

}  // namespace sk
