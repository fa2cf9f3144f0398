#pragma once

// PBW monomial bases of induced modules U_chi(g) (x)_{U_0(p)} L and the
// straightening that realises the action of g on them.
//
// A basis vector is y_{g_1}^{a_1} ... y_{g_m}^{a_m} (x) l with 0 <= a_k < p,
// indexed by (((a_1 p + a_2) p + ...) p + a_m) * dim L + l.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pbv/chevalley.hpp"
#include "pbv/exactlin.hpp"
#include "pbv/rootsys.hpp"

namespace pbv {

struct MonomialOrder {
  std::vector<int> roots;               // positive root indices gamma_1 .. gamma_m
  std::vector<std::vector<int>> rows;   // display grouping; concatenation equals roots
};

/// Height-then-lexicographic order on the given roots (one row).
MonomialOrder fallback_order(const RootSystem& rs, const std::vector<int>& roots);
/// The fixed order for the admissible shapes, the fallback order otherwise.
MonomialOrder fix_order(const RootSystem& rs, const LeviDatum& levi);
/// "y(1,0,0); y(1,1,0), y(0,1,0); ..."
std::string format_order(const RootSystem& rs, const MonomialOrder& order);

/// The module L induced from: basis with depths, and the action of the
/// elements of p that act nontrivially (h_i and the Levi root vectors).
struct BaseModule {
  std::size_t dim = 0;
  std::vector<LinearOp> ops;          // indexed by algebra id; dim_in() == 0 means "not provided"
  std::vector<RootCoeffs> depth;      // lambda - weight, in simple-root coordinates
  bool provides(int id) const { return ops[static_cast<std::size_t>(id)].dim_in() != 0; }
};

/// k_lambda: one vector on which h_i acts by lambda_i.
BaseModule one_dimensional_base(const ChevalleyAlgebra& alg, const Weight& lambda, const PrimeField& f);

struct InductionData {
  std::shared_ptr<const ChevalleyAlgebra> alg;
  PrimeField field{2};
  PChar chi;
  std::vector<int> u_roots;    // monomial order
  std::vector<bool> active;    // algebra ids acting on the module
  BaseModule base;
};

class RecursionLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PbwEngine {
 public:
  explicit PbwEngine(InductionData data);

  std::size_t dim() const { return dim_; }
  std::size_t monomial_count() const { return monomials_; }
  const InductionData& data() const { return data_; }

  std::vector<int> exponents(std::size_t idx) const;
  std::size_t levi_index(std::size_t idx) const { return idx % data_.base.dim; }
  std::size_t index_of(const std::vector<int>& exps, std::size_t levi) const;
  /// lambda minus the weight of the basis vector, in simple-root coordinates (always >= 0).
  RootCoeffs depth(std::size_t idx) const;

  /// g . (basis vector idx). Memoised; not safe for concurrent use.
  const SparseVec& act(int g, std::size_t idx);
  /// Full action matrix of g (column j = g . e_j).
  LinearOp matrix(int g);

 private:
  SparseVec compute(int g, std::size_t idx);
  SparseVec mono_zero(int g, std::size_t idx) const;

  InductionData data_;
  std::size_t m_;
  std::size_t dim_;
  std::size_t monomials_;
  std::vector<std::size_t> place_;   // index stride of digit k
  std::vector<int> position_;        // root index -> position in u_roots, or -1
  std::vector<std::vector<SparseVec>> memo_;
  std::vector<std::vector<std::uint8_t>> done_;
  int depth_guard_ = 0;
};

/// "row col value" per nonzero entry, ordered by column then row.
std::string export_triplets(const LinearOp& op);

}  // namespace pbv
