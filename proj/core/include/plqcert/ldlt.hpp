#pragma once

#include <variant>
#include <vector>

#include "plqcert/rational.hpp"

namespace plq {

// Certificate M = P' L D L' P with D >= 0 diagonal, L unit lower triangular.
struct LdltFactors {
  std::vector<std::size_t> perm;  // row/column permutation applied first
  RMatrix unit_lower;
  std::vector<Rational> diag;

  // Reassembles the factored matrix; used to audit the certificate.
  RMatrix reassemble() const;
};

struct Psd {
  LdltFactors certificate;
};
struct NotPsd {
  RVector witness;        // <witness, M witness> < 0, exactly
  Rational quadratic_form;
};

using PsdResult = std::variant<Psd, NotPsd>;

// Exact positive-semidefiniteness decision via pivoted LDL'.
// Throws InputError when M is not square symmetric.
PsdResult ldlt_psd(const RMatrix& m);

}  // namespace plq
