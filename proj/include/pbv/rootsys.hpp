#pragma once

// Root systems of types A, B, C, D with the usual Bourbaki labelling:
// alpha_n is short in B_n, long in C_n, and D_n forks at alpha_{n-2}.
// Simple roots are indexed from 0 internally; printed labels are 1-based.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pbv {

using IntVec = std::vector<std::int64_t>;
/// Weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
using Weight = IntVec;
/// Root in simple-root coordinates.
using RootCoeffs = IntVec;

enum class RootType { A, B, C, D };

char type_letter(RootType t);
RootType parse_root_type(const std::string& s);

class RootSystem {
 public:
  RootSystem(RootType type, int rank);

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;
  /// Number of positive roots.
  int N() const { return static_cast<int>(positive_.size()); }
  int coxeter_number() const;

  const std::vector<RootCoeffs>& positive_roots() const { return positive_; }
  const RootCoeffs& root(int index) const { return positive_[static_cast<std::size_t>(index)]; }
  /// Index of a positive root, or -1.
  int root_index(const RootCoeffs& c) const;
  bool is_root(const RootCoeffs& c) const;
  int simple_root_index(int i) const { return simple_index_[static_cast<std::size_t>(i)]; }
  /// Position i if root `index` is the simple root alpha_i, else -1.
  int simple_of(int index) const;
  int height(int index) const;
  int highest_root() const { return N() - 1; }

  /// cartan(i, j) = <alpha_j, alpha_i^vee>.
  std::int64_t cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  /// Symmetric integer form on simple roots (short roots of squared length 2).
  std::int64_t gram(int i, int j) const { return gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  std::int64_t squared_length(const RootCoeffs& c) const;

  /// Coefficients of beta^vee over the simple coroots.
  const IntVec& coroot(int index) const { return coroots_[static_cast<std::size_t>(index)]; }
  /// A root (simple-root coordinates) expressed as a weight.
  Weight root_as_weight(const RootCoeffs& c) const;
  /// <lambda, beta^vee> for a root beta (positive or negative); throws if beta is not a root.
  std::int64_t pairing(const Weight& lambda, const RootCoeffs& beta) const;
  /// <beta, alpha_i^vee> for beta in simple-root coordinates.
  std::int64_t root_pairing(const RootCoeffs& beta, int i) const;

  Weight rho() const { return Weight(static_cast<std::size_t>(rank_), 1); }

  /// Largest q with beta - q*alpha a root (alpha, beta positive root indices).
  int string_down(int alpha, int beta) const;

  std::string root_name(int index) const;

 private:
  RootType type_;
  int rank_;
  std::vector<IntVec> cartan_;
  std::vector<IntVec> gram_;
  std::vector<RootCoeffs> positive_;
  std::vector<IntVec> coroots_;
  std::vector<int> simple_index_;
  std::map<RootCoeffs, int> index_;
};

RootSystem build_root_system(RootType type, int rank);

bool in_first_dominant_alcove(const RootSystem& rs, const Weight& lambda, std::uint32_t p);
bool is_p_regular(const RootSystem& rs, const Weight& lambda, std::uint32_t p);

/// A reflection s_{alpha, r}; r = 0 and alpha simple gives s_i.
struct Reflection {
  RootCoeffs alpha;
  std::int64_t r = 0;
};
using WeylWord = std::vector<Reflection>;

/// The word s_{i_1} s_{i_2} ... for 0-based simple indices.
WeylWord simple_word(const RootSystem& rs, const std::vector<int>& indices);
WeylWord inverse(const WeylWord& w);
/// Parses "s1 s2 s3" (1-based) and "s[1,1,0;2]" for s_{alpha,r}.
WeylWord parse_word(const RootSystem& rs, const std::string& text);

/// mu - (<mu, alpha^vee> - r p) alpha
Weight reflect(const RootSystem& rs, const Reflection& s, const Weight& mu, std::uint32_t p);
/// w.lambda = w(lambda + rho) - rho, reflections applied right to left.
Weight dot_action(const RootSystem& rs, const WeylWord& w, const Weight& lambda, std::uint32_t p);

struct WeightDecomposition {
  Weight lambda0;
  Weight lambda1;
};
/// lambda = lambda0 + p lambda1 with every coordinate of lambda0 in [0, p).
WeightDecomposition decompose_weight(const Weight& lambda, std::uint32_t p);

struct LeviDatum {
  std::vector<int> I;
  std::vector<int> J;
  std::vector<int> levi_roots;  // positive roots in ZJ
  std::vector<int> u_roots;     // the remaining positive roots
  std::vector<bool> in_I;       // indexed by simple root
};

LeviDatum levi_datum(const RootSystem& rs, const std::vector<int>& I);

enum class Shape { None, APrefix, ASuffix, BSuffix, CPrefix, DSuffix, DAllButLast };

/// Classifies I (0-based, any order) among the admissible segment shapes.
Shape classify_shape(RootType type, int rank, const std::vector<int>& I);
bool shape_check(RootType type, int rank, const std::vector<int>& I);
std::string shape_name(Shape s);

/// Returns an explanation if (type, rank, p) violates the standing hypotheses.
std::optional<std::string> hypothesis_violation(RootType type, int rank, std::uint32_t p);

/// Weights lambda whose lambda + rho has coordinates in [0, p) and lies in C_0,
/// optionally restricted to p-regular ones; lexicographic in lambda + rho.
std::vector<Weight> alcove_weights(const RootSystem& rs, std::uint32_t p, bool regular_only);

std::string format_weight(const IntVec& v);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);

}  // namespace pbv
