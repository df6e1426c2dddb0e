#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace plq {

// Exact rational scalar, always in lowest terms with positive denominator.
// mpq_class arithmetic preserves canonical form; construction from a
// numerator/denominator pair does not, so go through rat()/rat_parse().
using Rational = mpq_class;

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Raised when an exact routine cannot handle the instance (size guards,
// unsupported dimension). Callers fall back to sampled modes.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

Rational rat(long num, long den = 1);

// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q <= 0... q<0 is normalized.
Rational rat_parse(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& q);

double rat_double(const Rational& q);

// Exact conversion of a finite double (every finite double is rational).
Rational rat_from_double(double x);

struct RVector {
  std::vector<Rational> e;

  RVector() = default;
  explicit RVector(std::size_t dim) : e(dim, Rational(0)) {}
  explicit RVector(std::vector<Rational> entries) : e(std::move(entries)) {}

  std::size_t dim() const { return e.size(); }
  Rational& operator[](std::size_t i) { return e[i]; }
  const Rational& operator[](std::size_t i) const { return e[i]; }
  bool operator==(const RVector& o) const { return e == o.e; }
  bool is_zero() const;
};

RVector rvec(std::initializer_list<long> entries);
RVector rvec_parse(const std::vector<std::string>& parts);

RVector operator+(const RVector& a, const RVector& b);
RVector operator-(const RVector& a, const RVector& b);
RVector operator*(const Rational& s, const RVector& v);
RVector operator-(const RVector& v);
Rational dot(const RVector& a, const RVector& b);
// Squared Euclidean norm; exact, used for colinear-order comparisons.
Rational norm2(const RVector& v);
std::string vec_str(const RVector& v);
std::vector<double> vec_double(const RVector& v);
RVector vec_from_double(const std::vector<double>& x);

// Dense row-major rational matrix.
struct RMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;

  RMatrix() = default;
  RMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const RMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  bool is_symmetric() const;
  bool is_zero() const;
  RVector row(std::size_t i) const;
};

RMatrix rmat(std::size_t rows, std::size_t cols, std::initializer_list<long> entries);
RVector mat_vec(const RMatrix& m, const RVector& v);
RMatrix mat_mul(const RMatrix& a, const RMatrix& b);
RMatrix transpose(const RMatrix& m);

// Rank of the row space, by fraction-free-ish Gaussian elimination.
std::size_t matrix_rank(RMatrix m);

// Basis of {x : Mx = 0}, one vector per free column; deterministic order.
std::vector<RVector> nullspace_basis(const RMatrix& m);

// One solution of Mx = rhs, or nullopt when inconsistent.
std::optional<RVector> solve_linear(RMatrix m, RVector rhs);

// Dimension of the affine hull of a nonempty point set.
std::size_t affine_rank(const std::vector<RVector>& points);

// Basis of the orthogonal complement of span{vs} in R^n.
std::vector<RVector> orthogonal_complement(const std::vector<RVector>& vs, std::size_t n);

}  // namespace plq
