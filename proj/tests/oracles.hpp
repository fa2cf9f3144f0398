#pragma once

// Independent reference computations used by the tests: dense arithmetic mod p,
// the sl_2 baby Verma module worked out by hand, and brute-force enumeration of
// cyclic submodules.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "pbv/verma.hpp"

namespace oracle {

using Dense = std::vector<std::int64_t>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inverse_by_search(std::int64_t a, std::int64_t p) {
  for (std::int64_t b = 1; b < p; ++b)
    if (mod(a * b, p) == 1) return b;
  return 0;
}

/// Rank of a dense matrix (rows) by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<Dense> rows, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && mod(rows[piv][c], p) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const std::int64_t inv = inverse_by_search(mod(rows[rank][c], p), p);
    for (auto& x : rows[rank]) x = mod(x * inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || mod(rows[r][c], p) == 0) continue;
      const std::int64_t f = rows[r][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[r][k] = mod(rows[r][k] - f * rows[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

/// Growing span of dense vectors kept in reduced form.
class DenseSpan {
 public:
  DenseSpan(std::size_t dim, std::int64_t p) : dim_(dim), p_(p) {}
  std::size_t dim() const { return rows_.size(); }
  /// Adds v; returns the reduced vector if it was new.
  std::optional<Dense> insert(Dense v) {
    for (const auto& [c, row] : rows_) {
      if (v[c] == 0) continue;
      const std::int64_t f = v[c];
      for (std::size_t k = 0; k < dim_; ++k) v[k] = mod(v[k] - f * row[k], p_);
    }
    std::size_t c = 0;
    while (c < dim_ && v[c] == 0) ++c;
    if (c == dim_) return std::nullopt;
    const std::int64_t inv = inverse_by_search(v[c], p_);
    for (auto& x : v) x = mod(x * inv, p_);
    for (auto& [c2, row] : rows_) {
      if (row[c] == 0) continue;
      const std::int64_t f = row[c];
      for (std::size_t k = 0; k < dim_; ++k) row[k] = mod(row[k] - f * v[k], p_);
    }
    rows_[c] = v;
    return v;
  }

 private:
  std::size_t dim_;
  std::int64_t p_;
  std::map<std::size_t, Dense> rows_;
};

inline Dense apply(const pbv::LinearOp& op, const Dense& v, std::int64_t p) {
  Dense out(op.dim_out(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& e : op.column(j).entries()) out[e.index] = mod(out[e.index] + v[j] * e.value, p);
  }
  return out;
}

/// Dimension of the submodule generated by v: closure under every acting basis element.
inline std::size_t cyclic_dim(const pbv::RepModule& m, const Dense& v) {
  const std::int64_t p = m.field().p();
  DenseSpan span(m.dim(), p);
  std::vector<Dense> queue;
  if (auto r = span.insert(v)) queue.push_back(*r);
  const auto ids = m.active_ids();
  while (!queue.empty() && span.dim() < m.dim()) {
    Dense w = std::move(queue.back());
    queue.pop_back();
    for (int g : ids)
      if (auto r = span.insert(apply(m.op(g), w, p))) queue.push_back(*r);
  }
  return span.dim();
}

struct BruteForce {
  bool irreducible = true;
  std::size_t vectors = 0;
  std::size_t smallest = 0;  // smallest proper cyclic submodule found
};

/// Enumerates every line in every simultaneous eigenspace of the h_i and checks
/// whether it generates the whole module.
inline BruteForce brute_force(const pbv::RepModule& m) {
  const std::int64_t p = m.field().p();
  const auto& alg = m.alg();
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> spaces;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    std::vector<std::int64_t> eig;
    for (int i = 0; i < alg.rank(); ++i) {
      Dense e(m.dim(), 0);
      e[j] = 1;
      const Dense he = apply(m.op(alg.h(i)), e, p);
      eig.push_back(he[j]);
    }
    spaces[eig].push_back(j);
  }
  BruteForce out;
  out.smallest = m.dim();
  for (const auto& [eig, idx] : spaces) {
    const std::size_t s = idx.size();
    std::vector<std::int64_t> coeff(s, 0);
    while (true) {
      std::size_t k = 0;
      while (k < s && ++coeff[k] == p) coeff[k++] = 0;
      if (k == s) break;
      std::size_t lead = 0;
      while (coeff[lead] == 0) ++lead;
      if (coeff[lead] != 1) continue;
      Dense v(m.dim(), 0);
      for (std::size_t q = 0; q < s; ++q) v[idx[q]] = coeff[q];
      ++out.vectors;
      const std::size_t d = cyclic_dim(m, v);
      if (d < m.dim()) {
        out.irreducible = false;
        out.smallest = std::min(out.smallest, d);
      }
    }
  }
  return out;
}

/// Z_0(lambda) for sl_2 written out by hand: basis v_k = y^k v, k < p, with
/// h v_k = (lambda - 2k) v_k, y v_k = v_(k+1), x v_k = k (lambda - k + 1) v_(k-1).
struct Sl2 {
  std::int64_t p;
  std::int64_t lambda;

  bool x_nonzero(std::int64_t k) const { return k > 0 && mod(k * (lambda - k + 1), p) != 0; }

  /// Submodules are spans of basis vectors (the weights lambda - 2k are distinct mod p);
  /// enumerate every subset and keep the closed ones.
  std::vector<std::uint32_t> submodules() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << p); ++s) {
      bool closed = true;
      for (std::int64_t k = 0; k < p && closed; ++k) {
        if (!(s >> k & 1)) continue;
        if (k + 1 < p && !(s >> (k + 1) & 1)) closed = false;
        if (x_nonzero(k) && !(s >> (k - 1) & 1)) closed = false;
      }
      if (closed) out.push_back(s);
    }
    return out;
  }
  bool simple() const { return submodules().size() == 2; }
  std::size_t radical_dim() const {
    const std::uint32_t full = (1u << p) - 1;
    std::uint32_t rad = 0;
    for (auto s : submodules())
      if (s != full) rad |= s;
    return static_cast<std::size_t>(__builtin_popcount(rad));
  }
  std::vector<std::int64_t> h_eigenvalues() const {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 0; k < p; ++k) out.push_back(mod(lambda - 2 * k, p));
    return out;
  }
};

inline std::mt19937_64 rng(std::uint64_t seed = 20240901) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

}  // namespace oracle
