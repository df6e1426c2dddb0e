#include "plqcert/rational.hpp"

#include <cmath>
#include <sstream>

namespace plq {

Rational rat(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat_parse(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q(mpz_class(text));
      return q;
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw InputError("rational with zero denominator: " + text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational literal: " + text);
  }
}

std::string rat_str(const Rational& q) {
  std::ostringstream os;
  if (q.get_den() == 1) {
    os << q.get_num();
  } else {
    os << q.get_num() << '/' << q.get_den();
  }
  return os.str();
}

double rat_double(const Rational& q) { return q.get_d(); }

Rational rat_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite double cannot become a rational");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

bool RVector::is_zero() const {
  for (const auto& x : e)
    if (x != 0) return false;
  return true;
}

RVector rvec(std::initializer_list<long> entries) {
  RVector v;
  v.e.reserve(entries.size());
  for (long x : entries) v.e.emplace_back(x);
  return v;
}

RVector rvec_parse(const std::vector<std::string>& parts) {
  RVector v;
  v.e.reserve(parts.size());
  for (const auto& p : parts) v.e.push_back(rat_parse(p));
  return v;
}

static void check_same_dim(const RVector& a, const RVector& b) {
  if (a.dim() != b.dim()) throw InputError("vector dimension mismatch");
}

RVector operator+(const RVector& a, const RVector& b) {
  check_same_dim(a, b);
  RVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

RVector operator-(const RVector& a, const RVector& b) {
  check_same_dim(a, b);
  RVector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

RVector operator*(const Rational& s, const RVector& v) {
  RVector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
  return r;
}

RVector operator-(const RVector& v) { return Rational(-1) * v; }

Rational dot(const RVector& a, const RVector& b) {
  check_same_dim(a, b);
  Rational s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational norm2(const RVector& v) { return dot(v, v); }

std::string vec_str(const RVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

std::vector<double> vec_double(const RVector& v) {
  std::vector<double> d(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) d[i] = rat_double(v[i]);
  return d;
}

RVector vec_from_double(const std::vector<double>& x) {
  RVector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = rat_from_double(x[i]);
  return v;
}

bool RMatrix::is_symmetric() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = i + 1; j < cols; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RMatrix::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RVector RMatrix::row(std::size_t i) const {
  RVector r(cols);
  for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

RMatrix rmat(std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
  if (entries.size() != rows * cols) throw InputError("matrix literal size mismatch");
  RMatrix m(rows, cols);
  std::size_t k = 0;
  for (long x : entries) m.a[k++] = Rational(x);
  return m;
}

RVector mat_vec(const RMatrix& m, const RVector& v) {
  if (m.cols != v.dim()) throw InputError("matrix-vector dimension mismatch");
  RVector r(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
  if (a.cols != b.rows) throw InputError("matrix-matrix dimension mismatch");
  RMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

RMatrix transpose(const RMatrix& m) {
  RMatrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

// Row echelon reduction in place; returns pivot columns.
static std::vector<std::size_t> echelon(RMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t matrix_rank(RMatrix m) { return echelon(m).size(); }

std::vector<RVector> nullspace_basis(const RMatrix& m) {
  RMatrix e = m;
  auto pivots = echelon(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RVector> basis;
  for (std::size_t free_c = 0; free_c < m.cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RVector v(m.cols);
    v[free_c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      // Row k has a unit pivot at pivots[k]; back out the free column.
      v[pivots[k]] = -e.at(k, free_c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVector> solve_linear(RMatrix m, RVector rhs) {
  if (m.rows != rhs.dim()) throw InputError("solve_linear dimension mismatch");
  RMatrix aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i];
  }
  auto pivots = echelon(aug);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == m.cols) return std::nullopt;  // pivot in rhs column: inconsistent
  RVector x(m.cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols);
  return x;
}

std::size_t affine_rank(const std::vector<RVector>& points) {
  if (points.empty()) throw PreconditionError("affine_rank of empty point set");
  const RVector& base = points.front();
  RMatrix diffs(points.size() - 1, base.dim());
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].dim() != base.dim()) throw InputError("affine_rank dimension mismatch");
    for (std::size_t j = 0; j < base.dim(); ++j) diffs.at(i - 1, j) = points[i][j] - base[j];
  }
  return matrix_rank(diffs);
}

std::vector<RVector> orthogonal_complement(const std::vector<RVector>& vs, std::size_t n) {
  RMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].dim() != n) throw InputError("orthogonal_complement dimension mismatch");
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vs[i][j];
  }
  return nullspace_basis(m);
}

}  // namespace plq
