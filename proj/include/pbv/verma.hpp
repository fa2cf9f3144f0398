#pragma once

// Finite-dimensional representations given by lazily built action matrices,
// the induced-module builders (Levi simples, parabolic and ordinary baby
// Verma modules) and the irreducibility decision procedure.
//
// Decision procedure. Every module built here is cyclic on its top vector
// and has a unique maximal submodule R. A vector generates the module iff
// it lies outside R, so the non-generating vectors of a maximal space form
// a subspace and the module is simple iff every maximal line generates.
// Any nonzero graded submodule contains a maximal vector (n^+ acts
// nilpotently), so it suffices to test maximal vectors one grade
// component at a time. For a maximal weight vector v, U(g)v = U(n^-)v,
// which is generated by the simple lowering operators for p odd.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbv/chevalley.hpp"
#include "pbv/exactlin.hpp"
#include "pbv/pbw.hpp"
#include "pbv/rootsys.hpp"

namespace pbv {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComponentKey {
  Weight weight_mod_p;
  IntVec grade;  // depth with the coordinates of I zeroed
  bool operator<(const ComponentKey& o) const {
    return std::tie(weight_mod_p, grade) < std::tie(o.weight_mod_p, o.grade);
  }
  bool operator==(const ComponentKey&) const = default;
};

class RepModule {
 public:
  using Factory = std::function<LinearOp(int)>;

  RepModule(std::shared_ptr<const ChevalleyAlgebra> alg, PrimeField f, std::size_t dim, std::vector<bool> active,
            Weight lambda, std::vector<bool> grade_mask, std::vector<RootCoeffs> depth, Factory factory);
  RepModule(const RepModule&) = delete;
  RepModule& operator=(const RepModule&) = delete;

  std::size_t dim() const { return dim_; }
  const PrimeField& field() const { return field_; }
  const ChevalleyAlgebra& alg() const { return *alg_; }
  const std::shared_ptr<const ChevalleyAlgebra>& alg_ptr() const { return alg_; }
  const Weight& lambda() const { return lambda_; }
  const std::vector<bool>& grade_mask() const { return grade_mask_; }

  bool acts(int g) const { return active_[static_cast<std::size_t>(g)]; }
  std::vector<int> active_ids() const;
  /// x_{alpha_i} for the simple roots that act.
  const std::vector<int>& raising() const { return raising_; }
  /// y_{alpha_i} for the simple roots that act.
  const std::vector<int>& lowering() const { return lowering_; }
  /// Action matrix of g; built on first use, safe to call concurrently.
  const LinearOp& op(int g) const;

  const RootCoeffs& depth(std::size_t idx) const { return depth_[idx]; }
  Weight weight(std::size_t idx) const;

  std::size_t component_count() const { return members_.size(); }
  int component(std::size_t idx) const { return component_of_[idx]; }
  const ComponentKey& component_key(int c) const { return keys_[static_cast<std::size_t>(c)]; }
  const std::vector<std::uint32_t>& component_members(int c) const { return members_[static_cast<std::size_t>(c)]; }
  std::uint32_t local_index(std::size_t idx) const { return local_[idx]; }
  bool top_grade(int c) const;

  /// Engine behind an induced module, if any.
  std::shared_ptr<PbwEngine> engine;
  std::string description;

 private:
  std::shared_ptr<const ChevalleyAlgebra> alg_;
  PrimeField field_;
  std::size_t dim_;
  std::vector<bool> active_;
  Weight lambda_;
  std::vector<bool> grade_mask_;
  std::vector<RootCoeffs> depth_;
  Factory factory_;
  std::vector<int> raising_, lowering_;

  std::vector<int> component_of_;
  std::vector<std::uint32_t> local_;
  std::vector<ComponentKey> keys_;
  std::vector<std::vector<std::uint32_t>> members_;

  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<LinearOp>> cache_;
};

using ModulePtr = std::shared_ptr<const RepModule>;

struct BuildOptions {
  std::size_t cap = 50000;          // largest module dimension accepted
  std::size_t line_cap = 100000;    // largest number of maximal lines enumerated per component
  bool fallback_order = false;      // ignore the fixed orders of the admissible shapes
};

/// Restricted simple module of g_J (J = simple roots outside I) with highest weight lambda,
/// extended to h; as a module for the Levi part of the parabolic.
ModulePtr build_levi_simple(std::shared_ptr<const ChevalleyAlgebra> alg, const LeviDatum& levi, const Weight& lambda,
                            const PrimeField& f, const BuildOptions& opts = {});

/// Induced module U_chi(g) (x) base along the given order, graded by the coordinates outside chi's I.
ModulePtr build_induced(std::shared_ptr<const ChevalleyAlgebra> alg, const PChar& chi, const Weight& lambda,
                        const PrimeField& f, const std::vector<int>& order, BaseModule base, const BuildOptions& opts);

ModulePtr build_parabolic_baby_verma(std::shared_ptr<const ChevalleyAlgebra> alg, const PChar& chi, const Weight& lambda,
                                     const PrimeField& f, const BuildOptions& opts = {});
ModulePtr build_baby_verma(std::shared_ptr<const ChevalleyAlgebra> alg, const PChar& chi, const Weight& lambda,
                           const PrimeField& f, const BuildOptions& opts = {});

/// Turns a module on which h and the Levi root vectors act into base data for induction.
BaseModule as_base_module(const RepModule& m);

struct ComponentProfile {
  Weight weight_mod_p;
  IntVec grade;
  std::size_t size = 0;
  std::size_t kernel_dim = 0;
  bool top_grade = false;
};

struct MaxVectorReport {
  std::vector<ComponentProfile> profile;        // components with a nonzero maximal space
  std::vector<std::vector<SparseVec>> bases;    // aligned with profile, global coordinates
  std::vector<int> components;                  // aligned with profile
  std::size_t total() const;
};

MaxVectorReport maximal_vectors(const RepModule& m);

struct Generation {
  bool generates = false;
  std::size_t dim = 0;
};

/// Submodule generated by an arbitrary vector (closure under the simple root vectors).
Generation generates(const RepModule& m, const SparseVec& v);
/// Same for a maximal weight vector: closure under lowering operators only, stopping
/// as soon as the top vector is reached.
Generation generates_maximal(const RepModule& m, const SparseVec& v);

struct Witness {
  SparseVec vector;
  std::size_t generated_dim = 0;
  ComponentProfile where;
};

struct IrreducibilityReport {
  bool irreducible = false;
  std::size_t dim = 0;
  std::vector<ComponentProfile> profile;
  std::optional<Witness> witness;
  std::size_t lines_checked = 0;
};

IrreducibilityReport is_irreducible(const RepModule& m, std::size_t line_cap = 100000);

/// Unique maximal submodule, as a subspace of m.
Subspace radical(const ModulePtr& m, std::size_t line_cap = 100000);

/// m / S. S must be stable under the action (checked). The quotient basis is
/// the set of standard vectors that are not pivots of S for the rightmost-pivot
/// echelon form, so the top vector stays at index 0 when S is proper.
ModulePtr quotient(const ModulePtr& m, const Subspace& s);

class NotStable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks that y^a y^b (x) 1 -> y^a (x) (y^b . top) is a surjective homomorphism from the
/// baby Verma module onto the parabolic one (a over nilradical roots, b over Levi roots).
bool check_surjection(std::shared_ptr<const ChevalleyAlgebra> alg, const PChar& chi, const Weight& lambda,
                      const PrimeField& f, const BuildOptions& opts, std::string* detail = nullptr);

/// act(a) act(b) - act(b) act(a) - act([a,b]) over all pairs of acting generators; returns
/// the number of violated column identities. Exhaustive unless `samples` > 0.
std::size_t representation_defects(const RepModule& m, std::size_t samples = 0, std::uint64_t seed = 1);
/// Frobenius relations: y^p = chi(y)^p, x^p = 0, h^p = h; returns the number of failures.
std::size_t frobenius_defects(const RepModule& m, const PChar& chi);

}  // namespace pbv
