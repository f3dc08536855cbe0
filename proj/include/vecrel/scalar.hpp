#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace vecrel {

// Exact rational number. Thin value wrapper around GMP's mpq_class kept
// canonical (lowest terms, positive denominator) after every operation.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    q_.canonicalize();
  }
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Scalar(const mpz_class& z) : q_(z) {}

  // Parses "p", "p/q", or "-p/q" in base 10.
  static Scalar parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Scalar: bad literal '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw std::domain_error("Scalar: zero denominator in '" + s + "'");
    return Scalar(q);
  }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.q_ != b.q_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.q_ >= b.q_; }

  Scalar inv() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(mpq_class(1 / q_));
  }

  // Canonical decimal form: "p" when the denominator is 1, else "p/q".
  std::string str() const { return q_.get_str(); }

  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace vecrel

#include <ostream>

namespace vecrel {
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }
}  // namespace vecrel
