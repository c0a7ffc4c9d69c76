#ifndef RANK2_SUBSPACE_HPP
#define RANK2_SUBSPACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "rank2/matrix.hpp"

namespace rank2 {

/// Linear subspace of a model, stored as a canonical (RREF) row basis.
/// The canonical form makes equality a plain comparison and keeps all
/// emitted bases deterministic.
template <class K>
struct Span {
  std::string model;
  std::size_t ambient = 0;
  Matrix<K> basis;  // RREF rows, no zero rows

  std::size_t dim() const { return basis.rows(); }
};

using Subspace = Span<Rational>;

template <class K>
Span<K> make_span(std::string model, std::size_t ambient, Matrix<K> rows) {
  assert(rows.rows() == 0 || rows.cols() == ambient);
  if (rows.rows() == 0) rows = Matrix<K>(0, ambient);
  const std::vector<std::size_t> piv = rows.rref_in_place();
  Matrix<K> basis(piv.size(), ambient);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = rows(i, j);
  return Span<K>{std::move(model), ambient, std::move(basis)};
}

template <class K>
Span<K> zero_span(const std::string& model, std::size_t ambient) {
  return Span<K>{model, ambient, Matrix<K>(0, ambient)};
}

template <class K>
Span<K> full_span(const std::string& model, std::size_t ambient) {
  return Span<K>{model, ambient, Matrix<K>::identity(ambient)};
}

template <class K>
bool operator==(const Span<K>& a, const Span<K>& b) {
  return a.ambient == b.ambient && a.basis == b.basis;
}
template <class K>
bool operator!=(const Span<K>& a, const Span<K>& b) {
  return !(a == b);
}

template <class K>
Span<K> span_sum(const Span<K>& a, const Span<K>& b) {
  assert(a.ambient == b.ambient);
  Matrix<K> rows = a.basis;
  for (std::size_t i = 0; i < b.basis.rows(); ++i) rows.append_row(b.basis.row(i));
  return make_span(a.model, a.ambient, std::move(rows));
}

/// Row-space intersection via the left kernel of the stacked matrix:
/// x = u A = v B  iff  (u, -v) lies in the left kernel of [A; B].
template <class K>
Span<K> span_intersect(const Span<K>& a, const Span<K>& b) {
  assert(a.ambient == b.ambient);
  const std::size_t ra = a.basis.rows(), rb = b.basis.rows();
  if (ra == 0 || rb == 0) return zero_span<K>(a.model, a.ambient);
  Matrix<K> stacked(ra + rb, a.ambient);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < a.ambient; ++j) stacked(i, j) = a.basis(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < a.ambient; ++j) stacked(ra + i, j) = b.basis(i, j);
  const Matrix<K> ker = stacked.transpose().right_kernel();
  Matrix<K> rows(ker.rows(), a.ambient);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t i = 0; i < ra; ++i) {
      if (is_zero(ker(r, i))) continue;
      for (std::size_t j = 0; j < a.ambient; ++j) rows(r, j) += ker(r, i) * a.basis(i, j);
    }
  return make_span(a.model, a.ambient, std::move(rows));
}

template <class K>
bool span_contains(const Span<K>& s, const std::vector<K>& v) {
  Matrix<K> rows = s.basis;
  rows.append_row(v);
  return rows.rank() == s.dim();
}

template <class K>
bool span_contains(const Span<K>& outer, const Span<K>& inner) {
  for (std::size_t i = 0; i < inner.basis.rows(); ++i)
    if (!span_contains(outer, inner.basis.row(i))) return false;
  return true;
}

/// Coordinates of v in the row basis of s; requires v in s.
template <class K>
std::vector<K> span_coordinates(const Span<K>& s, const std::vector<K>& v) {
  // s.basis is RREF with unit pivots: coefficients are read off pivot columns.
  Matrix<K> m = s.basis;
  std::vector<std::size_t> piv = m.rref_in_place();  // already RREF, recovers pivot set
  std::vector<K> coeff(s.dim(), K(0));
  std::vector<K> rest = v;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    coeff[i] = rest[piv[i]];
    if (is_zero(coeff[i])) continue;
    for (std::size_t j = 0; j < s.ambient; ++j) rest[j] -= coeff[i] * s.basis(i, j);
  }
  for (const auto& x : rest)
    if (!is_zero(x)) throw std::invalid_argument("span_coordinates: vector not in subspace");
  return coeff;
}

/// W ominus V: the orthogonal complement of V inside W with respect to the
/// symmetric bilinear form G (rows of V must lie in W for the geometric
/// reading, but the computation is just W cap V-perp).
template <class K>
Span<K> span_complement_within(const Span<K>& w, const Span<K>& v, const Matrix<K>& form) {
  // x = c W with (V G) x^T = 0, i.e. (V G W^T) c^T = 0.
  if (v.dim() == 0) return w;
  Matrix<K> vgw = v.basis * form * w.basis.transpose();
  Matrix<K> ker = vgw.right_kernel();  // rows c
  Matrix<K> rows(ker.rows(), w.ambient);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t i = 0; i < w.dim(); ++i) {
      if (is_zero(ker(r, i))) continue;
      for (std::size_t j = 0; j < w.ambient; ++j) rows(r, j) += ker(r, i) * w.basis(i, j);
    }
  return make_span(w.model, w.ambient, std::move(rows));
}

/// Orthogonal projection of a vector onto span v w.r.t. form G
/// (G positive definite on v).
template <class K>
std::vector<K> span_project(const Span<K>& v, const Matrix<K>& form, const std::vector<K>& x) {
  if (v.dim() == 0) return std::vector<K>(v.ambient, K(0));
  // Solve (V G V^T) c = V G x.
  Matrix<K> gram = v.basis * form * v.basis.transpose();
  std::vector<K> rhs = v.basis.apply(form.apply(x));
  Matrix<K> aug(gram.rows(), gram.cols() + 1);
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) aug(i, j) = gram(i, j);
    aug(i, gram.cols()) = rhs[i];
  }
  aug.rref_in_place();
  std::vector<K> out(v.ambient, K(0));
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const K& c = aug(i, gram.cols());
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j < v.ambient; ++j) out[j] += c * v.basis(i, j);
  }
  return out;
}

/// Dimension of the image of s under the orthogonal projection onto t.
template <class K>
std::size_t span_projection_dim(const Span<K>& t, const Matrix<K>& form, const Span<K>& s) {
  Matrix<K> rows(s.dim(), s.ambient);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::vector<K> p = span_project(t, form, s.basis.row(i));
    for (std::size_t j = 0; j < s.ambient; ++j) rows(i, j) = p[j];
  }
  return rows.rank();
}

/// Image of s under the orthogonal projection onto t.
template <class K>
Span<K> span_projection(const Span<K>& t, const Matrix<K>& form, const Span<K>& s) {
  Matrix<K> rows(s.dim(), s.ambient);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    std::vector<K> p = span_project(t, form, s.basis.row(i));
    for (std::size_t j = 0; j < s.ambient; ++j) rows(i, j) = p[j];
  }
  return make_span(s.model, s.ambient, std::move(rows));
}

template <class K>
bool spans_direct_sum(const std::vector<Span<K>>& parts, const Span<K>& whole) {
  std::size_t total = 0;
  Span<K> acc = zero_span<K>(whole.model, whole.ambient);
  for (const auto& p : parts) {
    total += p.dim();
    acc = span_sum(acc, p);
  }
  return total == whole.dim() && acc == whole;
}

/// Lift a rational span into an extension field.
inline Span<QuadExt> lift_span(const Subspace& s) {
  Matrix<QuadExt> rows(s.basis.rows(), s.ambient);
  for (std::size_t i = 0; i < s.basis.rows(); ++i)
    for (std::size_t j = 0; j < s.ambient; ++j) rows(i, j) = QuadExt(s.basis(i, j));
  return make_span(s.model, s.ambient, std::move(rows));
}

inline Matrix<QuadExt> lift_matrix(const MatQ& m) {
  Matrix<QuadExt> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = QuadExt(m(i, j));
  return out;
}

}  // namespace rank2

#endif
