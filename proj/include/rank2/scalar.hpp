#ifndef RANK2_SCALAR_HPP
#define RANK2_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rank2 {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Thrown when a structural invariant fails during construction or checking.
struct InvariantError : std::runtime_error {
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }

/// "p" or "p/q", q > 0.
std::string to_string(const Rational& x);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

/// Exact square root test; if x = (p/q)^2 with p/q >= 0, stores the root.
bool exact_sqrt(const Rational& x, Rational& root);

/// Element of the real quadratic extension Q(sqrt(d)), d a positive
/// non-square rational carried by the value.  Values with b == 0 are
/// field-agnostic and combine with any d.  Used for the constant
/// Kahler angle family, where the plane itself has coordinates in
/// Q(sqrt(tan^2 phi)) although cos^2 phi is rational.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(std::move(a)) {}                 // NOLINT(google-explicit-constructor)
  QuadExt(int a) : a_(a) {}                                 // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, Rational d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    normalize();
  }

  static QuadExt sqrt_of(const Rational& d) { return QuadExt(0, 1, d); }

  const Rational& rat() const { return a_; }
  const Rational& irr() const { return b_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, merged(x, y));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, merged(x, y));
  }
  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.d_); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const Rational d = merged(x, y);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw std::domain_error("QuadExt: division by zero");
    const Rational d = merged(x, y);
    const Rational n = y.a_ * y.a_ - y.b_ * y.b_ * d;  // norm form, nonzero since d non-square
    QuadExt conj(y.a_, -y.b_, d);
    QuadExt prod = x * conj;
    return QuadExt(prod.a_ / n, prod.b_ / n, d);
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  std::string str() const;

 private:
  void normalize() {
    if (b_.is_zero()) d_ = 0;
  }
  static Rational merged(const QuadExt& x, const QuadExt& y) {
    if (x.b_.is_zero()) return y.d_;
    if (y.b_.is_zero()) return x.d_;
    if (x.d_ != y.d_) throw std::domain_error("QuadExt: mixed radicands");
    return x.d_;
  }

  Rational a_{0};
  Rational b_{0};
  Rational d_{0};
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

std::string to_string(const QuadExt& x);

}  // namespace rank2

#endif
