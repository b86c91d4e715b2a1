#include "qalg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qalg {

namespace {

constexpr __int128 kInlineLimit = static_cast<__int128>(1) << 62;

unsigned __int128 uabs(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long value) {
  if (fits(value)) {
    num_ = value;
  } else {
    assign_big(mpq_class(mpz_class(std::to_string(value))));
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  __int128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  set_reduced(n, d);
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

bool Rational::fits(__int128 v) noexcept { return v < kInlineLimit && v > -kInlineLimit; }

void Rational::set_reduced(__int128 num, __int128 den) {
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  auto g = gcd128(uabs(num), static_cast<unsigned __int128>(den));
  if (g != 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

void Rational::assign_big(mpq_class value) {
  value.canonicalize();
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    // both magnitudes are below 2^62, so they fit in a long
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  big_ = std::make_shared<const mpq_class>(std::move(value));
}

std::size_t Rational::bit_size() const {
  if (big_) {
    return mpz_sizeinbase(big_->get_num_mpz_t(), 2) + mpz_sizeinbase(big_->get_den_mpz_t(), 2);
  }
  auto bits = [](std::int64_t v) {
    std::size_t n = 0;
    for (auto u = static_cast<std::uint64_t>(v < 0 ? -v : v); u; u >>= 1) ++n;
    return n;
  };
  return bits(num_) + bits(den_);
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  auto slash = s.find('/');
  auto check_int = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  num = std::string(trim(num));
  den = std::string(trim(den));
  if (!check_int(num, true) || !check_int(den, false)) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator '" + s + "'");
  Rational r;
  r.assign_big(mpq_class(mpz_class(num), d));
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    // negation keeps the value canonical and large
    r.big_ = std::make_shared<const mpq_class>(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      __int128 s = static_cast<__int128>(num_) + rhs.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
      set_reduced(s, 1);
      return *this;
    }
    __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * rhs.den_;
    set_reduced(n, d);
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = gcd64(num_, rhs.den_);
    std::int64_t g2 = gcd64(rhs.num_, den_);
    __int128 n = static_cast<__int128>(num_ / g1) * (rhs.num_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (rhs.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    set_reduced(n, d);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational");
  Rational r;
  if (big_) {
    r.assign_big(1 / *big_);
  } else if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    __int128 s = static_cast<__int128>(a.num_) * b.num_ + num_;
    if (fits(s)) {
      num_ = static_cast<std::int64_t>(s);
      return;
    }
    set_reduced(s, 1);
    return;
  }
  *this += a * b;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  // canonical forms: a big value never equals an inline one
  return false;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (!lhs.big_ && !rhs.big_) {
    __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
    __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
    return l <=> r;
  }
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace qalg
