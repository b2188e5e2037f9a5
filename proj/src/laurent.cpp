#include "straightknot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "straightknot/error.hpp"

namespace sk {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient addition");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient product");
  return r;
}

Laurent::Laurent(int offset, std::vector<int64_t> coeffs) : off_(offset), c_(std::move(coeffs)) { trim(); }

Laurent Laurent::monomial(int64_t c, int e) {
  Laurent r;
  if (c != 0) {
    r.off_ = e;
    r.c_ = {c};
  }
  return r;
}

void Laurent::trim() {
  size_t lo = 0;
  while (lo < c_.size() && c_[lo] == 0) ++lo;
  if (lo == c_.size()) {
    c_.clear();
    off_ = 0;
    return;
  }
  size_t hi = c_.size();
  while (c_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < c_.size()) c_ = std::vector<int64_t>(c_.begin() + lo, c_.begin() + hi);
  off_ += static_cast<int>(lo);
}

int64_t Laurent::coeff(int e) const {
  if (c_.empty() || e < off_ || e > max_exp()) return 0;
  return c_[e - off_];
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(off_, o.off_);
  int hi = std::max(max_exp(), o.max_exp());
  std::vector<int64_t> r(hi - lo + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[off_ - lo + i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) {
    auto& x = r[o.off_ - lo + i];
    x = checked_add(x, o.c_[i]);
  }
  return Laurent(lo, std::move(r));
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& x : r.c_) x = checked_mul(x, -1);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
  }
  return Laurent(off_ + o.off_, std::move(r));
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  if (!r.is_zero()) r.off_ += k;
  return r;
}

Laurent Laurent::substitute(int k) const {
  if (k == 0) throw Error(ErrorKind::DomainError, "substitute by x^0");
  if (is_zero()) return {};
  int a = off_ * k, b = max_exp() * k;
  int lo = std::min(a, b), hi = std::max(a, b);
  std::vector<int64_t> r(hi - lo + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[(off_ + static_cast<int>(i)) * k - lo] = c_[i];
  return Laurent(lo, std::move(r));
}

Laurent Laurent::exact_div(const Laurent& o) const {
  if (o.is_zero()) throw Error(ErrorKind::DomainError, "division by zero polynomial");
  if (is_zero()) return {};
  std::vector<int64_t> rem = c_;
  const auto& d = o.c_;
  if (rem.size() < d.size()) throw Error(ErrorKind::DomainError, "inexact polynomial division");
  std::vector<int64_t> q(rem.size() - d.size() + 1, 0);
  int64_t lead = d.back();
  for (size_t i = q.size(); i-- > 0;) {
    int64_t top = rem[i + d.size() - 1];
    if (top % lead != 0) throw Error(ErrorKind::DomainError, "inexact polynomial division");
    int64_t f = top / lead;
    q[i] = f;
    if (f == 0) continue;
    for (size_t j = 0; j < d.size(); ++j) rem[i + j] = checked_add(rem[i + j], checked_mul(-f, d[j]));
  }
  for (auto x : rem)
    if (x != 0) throw Error(ErrorKind::DomainError, "inexact polynomial division");
  return Laurent(off_ - o.off_, std::move(q));
}

Laurent Laurent::pow(int k) const {
  if (k < 0) throw Error(ErrorKind::DomainError, "negative power");
  Laurent r = constant(1), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

int64_t Laurent::eval_pm1(int sign) const {
  int64_t s = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    int e = off_ + static_cast<int>(i);
    bool neg = sign < 0 && (e % 2 != 0);
    s = checked_add(s, neg ? checked_mul(c_[i], -1) : c_[i]);
  }
  return s;
}

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}
}  // namespace

uint64_t Laurent::eval_mod(uint64_t x, uint64_t xinv, uint64_t p) const {
  uint64_t s = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    int e = off_ + static_cast<int>(i);
    uint64_t xe = e >= 0 ? powmod(x, e, p) : powmod(xinv, -static_cast<int64_t>(e), p);
    int64_t c = c_[i];
    uint64_t cm = c >= 0 ? static_cast<uint64_t>(c) % p : (p - static_cast<uint64_t>(-(c + 1)) % p - 1) % p;
    s = (s + mulmod(cm, xe, p)) % p;
  }
  return s;
}

std::string Laurent::serialize() const {
  std::ostringstream os;
  os << "offset=" << off_ << "; coeffs=[";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

Laurent Laurent::parse(const std::string& s) {
  auto bad = [&] { return Error(ErrorKind::Parse, "bad polynomial '" + s + "'"); };
  auto p = s.find("offset=");
  auto q = s.find("coeffs=[");
  auto e = s.find(']', q == std::string::npos ? 0 : q);
  if (p == std::string::npos || q == std::string::npos || e == std::string::npos) throw bad();
  int off;
  try {
    off = std::stoi(s.substr(p + 7));
  } catch (...) {
    throw bad();
  }
  std::vector<int64_t> c;
  std::string body = s.substr(q + 8, e - q - 8);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }), tok.end());
    if (tok.empty()) throw bad();
    try {
      size_t used = 0;
      c.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw bad();
    } catch (const Error&) {
      throw;
    } catch (...) {
      throw bad();
    }
  }
  Laurent r(off, std::move(c));
  if (!r.is_zero() && r.off_ != off) throw bad();
  return r;
}

std::string Laurent::pretty(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    int64_t c = c_[i];
    if (c == 0) continue;
    int e = off_ + static_cast<int>(i);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    int64_t a = c < 0 ? -c : c;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::strong_ordering Laurent::operator<=>(const Laurent& o) const {
  if (auto c = off_ <=> o.off_; c != 0) return c;
  return std::lexicographical_compare_three_way(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

}  // namespace sk
