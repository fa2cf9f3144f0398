#pragma once

// Chevalley basis {x_alpha, y_alpha, h_i} of the simple Lie algebra of a
// root system, with integer structure constants.
//
// Basis ids: x of positive root k is k, y of root k is N + k, h_i is 2N + i.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pbv/exactlin.hpp"
#include "pbv/rootsys.hpp"

namespace pbv {

enum class BasisKind { X, Y, H };

struct BasisElement {
  BasisKind kind;
  int index;  // positive root index for X and Y, simple index for H
  bool operator==(const BasisElement&) const = default;
};

/// Integer combination of basis ids, sorted by id, no zero coefficients.
using IntCombination = std::vector<std::pair<int, std::int64_t>>;

enum class SignConvention {
  Standard,  // every non-simple root vector taken with sign +1
  Flipped,   // root vectors of even height negated
};

class ChevalleyAlgebra {
 public:
  ChevalleyAlgebra(RootSystem rs, SignConvention signs = SignConvention::Standard);

  const RootSystem& roots() const { return rs_; }
  SignConvention signs() const { return signs_; }
  int dim() const { return 2 * N_ + n_; }
  int N() const { return N_; }
  int rank() const { return n_; }

  int x(int root) const { return root; }
  int y(int root) const { return N_ + root; }
  int h(int i) const { return 2 * N_ + i; }
  BasisElement element(int id) const;
  int id(const BasisElement& b) const;
  /// Root-lattice degree of a basis element (simple-root coordinates).
  RootCoeffs degree(int id) const;

  const IntCombination& bracket(int a, int b) const { return table_[static_cast<std::size_t>(a * dim() + b)]; }
  /// N_{alpha,beta} with [x_alpha, x_beta] = N x_{alpha+beta} (0 if alpha+beta is not a root).
  std::int64_t structure_constant(int alpha, int beta) const;
  /// Image under the restricted p-map: root vectors go to 0, h_i to h_i.
  IntCombination p_power(int id) const;

  std::string name(int id) const;
  /// One line "(a, b) -> c*z + ..." per pair a < b with nonzero bracket.
  std::string export_brackets() const;

 private:
  RootSystem rs_;
  SignConvention signs_;
  int N_;
  int n_;
  std::vector<IntCombination> table_;
};

ChevalleyAlgebra build_algebra(const RootSystem& rs, SignConvention signs = SignConvention::Standard);

/// Ad-action of a basis element on g as a matrix over F_p.
LinearOp adjoint_op(const ChevalleyAlgebra& alg, int id, const PrimeField& f);

/// A p-character of standard Levi form: chi(y_alpha) = values for alpha in I,
/// zero on every other basis element.
class PChar {
 public:
  PChar() = default;
  PChar(std::vector<int> I, std::vector<Scalar> values, std::uint32_t p, int rank);

  const std::vector<int>& I() const { return I_; }
  const std::vector<Scalar>& values() const { return values_; }
  std::uint32_t p() const { return p_; }
  bool is_zero() const { return I_.empty(); }
  /// chi(y_alpha_i) for a simple index i.
  Scalar value_on_simple(int i) const { return by_simple_.empty() ? 0 : by_simple_[static_cast<std::size_t>(i)]; }
  /// chi(y_beta)^p for a positive root index beta of the given algebra.
  Scalar wrap_scalar(const RootSystem& rs, int root) const;

 private:
  std::vector<int> I_;
  std::vector<Scalar> values_;
  std::vector<Scalar> by_simple_;
  std::uint32_t p_ = 0;
};

/// Values default to 1 on I; a zero value is rejected.
PChar make_pchar(const ChevalleyAlgebra& alg, const std::vector<int>& I, const std::vector<std::int64_t>& values,
                 const PrimeField& f);

}  // namespace pbv
