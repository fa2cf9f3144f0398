#pragma once

// Verification campaigns: sweeps over weights for a fixed (type, rank, p, I),
// the sub-regular block computations for types A and B, and negative controls.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbv/chevalley.hpp"
#include "pbv/rootsys.hpp"
#include "pbv/verma.hpp"

namespace pbv {

enum class WeightPolicy {
  Alcove,           // p-regular lambda with lambda + rho in C_0
  Representatives,  // lambda + rho = m on I, 1 on J, 0 < m_i < p
  Transversal,      // every lambda with coordinates in [0, p)
  Explicit,
};

std::string policy_name(WeightPolicy p);
WeightPolicy parse_policy(const std::string& s);

enum class Expectation { Irreducible, Reducible, None };

std::string expectation_name(Expectation e);

struct CampaignSpec {
  RootType type = RootType::A;
  int rank = 2;
  std::uint32_t p = 5;
  std::vector<int> I;  // 0-based
  std::vector<WeightPolicy> policies{WeightPolicy::Alcove, WeightPolicy::Representatives};
  std::vector<Weight> explicit_weights;
  BuildOptions build;
  SignConvention signs = SignConvention::Standard;
  std::vector<std::int64_t> chi_values;  // empty: 1 on every simple root of I
  unsigned workers = 1;
  bool enforce_hypotheses = true;
};

struct CampaignRow {
  std::string label;
  std::string source;
  RootType type = RootType::A;
  int rank = 0;
  std::uint32_t p = 0;
  std::vector<int> I;
  Weight lambda;
  Expectation expect = Expectation::None;
  std::optional<std::size_t> expected_dim;
  SignConvention signs = SignConvention::Standard;
  std::vector<std::int64_t> chi_values;
  bool fallback_order = false;
  bool baby = false;  // ordinary baby Verma module instead of the parabolic one

  bool built = false;
  std::size_t dim = 0;
  bool irreducible = false;
  std::size_t witness_dim = 0;
  std::size_t lines_checked = 0;
  std::vector<ComponentProfile> profile;
  double millis = 0;
  bool cap_exceeded = false;
  std::string error;

  bool skipped() const { return cap_exceeded; }
  bool passed() const;
  std::string verdict() const;
};

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CampaignReport {
  std::string name;
  std::vector<CampaignRow> rows;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t skipped() const;
  std::vector<const CampaignRow*> failures() const;
};

/// Runs every row (build + decision) on a pool of workers; rows keep their order.
void run_rows(std::vector<CampaignRow>& rows, const BuildOptions& build, unsigned workers);

/// Weights of the representative family (m on I, 1 on J) - rho.
std::vector<Weight> representative_weights(const RootSystem& rs, std::uint32_t p, const std::vector<int>& I);
/// dim L(lambda) restricted to the Levi factor of J by Weyl's formula, valid when every
/// pairing <lambda + rho, beta^vee> with beta in R_J^+ lies in [1, p]; nullopt otherwise.
std::optional<std::size_t> levi_weyl_dimension(const RootSystem& rs, const LeviDatum& levi, const Weight& lambda0,
                                               std::uint32_t p);

/// Every enumerated lambda gives a parabolic baby Verma module that must be irreducible
/// (p-regular weights in C_0, representatives, and all of X(T)/pX(T) when I = Pi).
CampaignReport verify_main_theorem(const CampaignSpec& spec);

struct BlockSpec {
  int rank = 2;
  std::uint32_t p = 5;
  IntVec r;  // lambda + rho of the base weight
  BuildOptions build;
  unsigned workers = 1;
};

/// Type A, I = {alpha_1, ..., alpha_{n-1}}: lambda_i = sigma^i . lambda_0, sigma = s_1 ... s_n.
CampaignReport subregular_block_A(const BlockSpec& spec);
/// Type B, I = {alpha_2, ..., alpha_n}: lambda_i = w_i . lambda_1 and the modified weights lambda_i'.
CampaignReport subregular_block_B(const BlockSpec& spec);

/// Closed-form lambda_i + rho of the type A block.
IntVec block_A_closed_form(const IntVec& r, int i);
/// The weights of the type B block in lambda + rho coordinates, indexed 1..2n (entry 0 unused).
struct BlockB {
  std::vector<IntVec> lambda_rho;        // lambda_i + rho
  std::vector<IntVec> primed_rho;        // lambda_i' + rho, empty for i = n, 2n
};
BlockB block_B_weights(const RootSystem& rs, const IntVec& r, std::uint32_t p);
/// The displayed closed forms of the type B block, written for generic rank. At ranks
/// below min_rank the short root enters a displayed coordinate and the form does not apply.
struct BlockDisplay {
  std::string name;
  int index = 0;
  bool primed = false;
  int min_rank = 2;
  IntVec tuple;
};
std::vector<BlockDisplay> block_B_displays(const IntVec& r);

/// Cases the checker must get right without the main theorem: sl_2 baby Verma
/// modules against the closed-form answer and the reducible A_2 module Z_0(0).
CampaignReport negative_controls(std::uint32_t p, unsigned workers = 1);

}  // namespace pbv
