#include "rank2/scalar.hpp"

#include "rank2/matrix.hpp"

namespace rank2 {

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

bool exact_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  Integer n = numerator(x), d = denominator(x);
  Integer rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

std::string QuadExt::str() const {
  if (b_.is_zero()) return to_string(a_);
  std::string s = to_string(a_) + (b_ > 0 ? "+" : "-");
  Rational ab = abs(b_);
  if (ab != 1) s += to_string(ab) + "*";
  return s + "sqrt(" + to_string(d_) + ")";
}

std::string to_string(const QuadExt& x) { return x.str(); }

std::size_t bareiss_rank(const MatQ& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // Clear denominators row by row.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) l = lcm(l, denominator(m(i, j)));
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace rank2
