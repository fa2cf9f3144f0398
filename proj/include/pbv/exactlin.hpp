#pragma once

// Exact arithmetic over a prime field F_p and the sparse linear algebra
// (echelon forms, kernels, span closures) that the module code is built on.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pbv {

using Scalar = std::uint32_t;

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  Scalar reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inv(Scalar a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Free-function spelling of PrimeField::inv.
inline Scalar fp_inv(Scalar a, const PrimeField& f) { return f.inv(a); }

struct SparseEntry {
  std::uint32_t index;
  Scalar value;
  bool operator==(const SparseEntry&) const = default;
};

/// Sparse vector: entries sorted by index, no stored zeros.
class SparseVec {
 public:
  SparseVec() = default;
  explicit SparseVec(std::size_t dim) : dim_(dim) {}

  /// Builds from arbitrary (index, value) pairs; sums duplicates, drops zeros.
  static SparseVec from_pairs(std::size_t dim, std::vector<std::pair<std::uint32_t, std::int64_t>> pairs,
                              const PrimeField& f);
  static SparseVec unit(std::size_t dim, std::uint32_t index, Scalar value = 1);

  std::size_t dim() const { return dim_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Scalar at(std::uint32_t index) const;

  SparseVec scaled(Scalar c, const PrimeField& f) const;
  bool operator==(const SparseVec&) const = default;

  // Appends an entry; caller guarantees increasing indices and nonzero value.
  void push_back_unchecked(std::uint32_t index, Scalar value) { entries_.push_back({index, value}); }

 private:
  std::size_t dim_ = 0;
  std::vector<SparseEntry> entries_;
};

SparseVec add(const SparseVec& a, const SparseVec& b, const PrimeField& f);
/// a + c*b
SparseVec axpy(const SparseVec& a, Scalar c, const SparseVec& b, const PrimeField& f);

/// Dense scratch accumulator for building sparse vectors from many terms.
class Accumulator {
 public:
  Accumulator(std::size_t dim, const PrimeField& f) : dense_(dim, 0), f_(f) {}
  void add(std::uint32_t index, Scalar value);
  void add_scaled(const SparseVec& v, Scalar c);
  /// Returns the accumulated vector and resets the accumulator.
  SparseVec take();

 private:
  std::vector<Scalar> dense_;
  std::vector<std::uint32_t> touched_;
  PrimeField f_;
};

/// Row-major sparse matrix.
struct SparseMat {
  std::size_t ncols = 0;
  std::vector<SparseVec> rows;
};

/// Linear operator stored by columns: column j is the image of basis vector j.
class LinearOp {
 public:
  LinearOp() = default;
  LinearOp(std::size_t dim_out, std::vector<SparseVec> columns);

  std::size_t dim_in() const { return columns_.size(); }
  std::size_t dim_out() const { return dim_out_; }
  const SparseVec& column(std::size_t j) const { return columns_[j]; }
  const std::vector<SparseVec>& columns() const { return columns_; }

  SparseVec apply(const SparseVec& v, const PrimeField& f) const;
  std::size_t nnz() const;

 private:
  std::size_t dim_out_ = 0;
  std::vector<SparseVec> columns_;
};

SparseMat to_rows(const LinearOp& op);
LinearOp from_rows(const SparseMat& m);
/// (a*b) as operators: apply b first.
LinearOp compose(const LinearOp& a, const LinearOp& b, const PrimeField& f);
LinearOp identity_op(std::size_t dim);
LinearOp scaled_identity_op(std::size_t dim, Scalar c);
LinearOp op_sub(const LinearOp& a, const LinearOp& b, const PrimeField& f);
LinearOp op_power(const LinearOp& a, std::uint64_t e, const PrimeField& f);

/// Incremental row echelon basis of a subspace of F_p^dim.
///
/// Each stored vector is normalised to 1 at its pivot, which is its
/// leftmost nonzero index; pivots are distinct. Reduction walks the
/// incoming vector left to right, so the result is independent of
/// insertion order for the leading terms (leftmost-pivot, first-row rule).
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, const PrimeField& f) : dim_(dim), f_(f) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the basis; returns the remainder (zero iff v in span).
  SparseVec reduce(const SparseVec& v) const;
  /// Inserts v; returns true if it enlarged the span.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Basis vectors in increasing pivot order.
  std::vector<SparseVec> basis() const;
  /// Reduced row echelon basis (pivot columns cleared in every other row).
  std::vector<SparseVec> rref() const;
  std::vector<std::uint32_t> pivots() const;

 private:
  std::size_t dim_;
  PrimeField f_;
  std::map<std::uint32_t, SparseVec> rows_;
};

/// Dense echelon basis for short vectors (used per weight component).
class DenseEchelon {
 public:
  DenseEchelon(std::size_t dim, const PrimeField& f) : dim_(dim), f_(f), row_of_pivot_(dim, -1) {}
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  void reduce_in_place(std::vector<Scalar>& v) const;
  bool insert(std::vector<Scalar> v);
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  /// Kernel basis of the matrix whose rows were inserted.
  std::vector<std::vector<Scalar>> nullspace() const;

 private:
  std::size_t dim_;
  PrimeField f_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::int64_t> row_of_pivot_;
};

struct Subspace {
  std::size_t ambient = 0;
  std::vector<SparseVec> basis;  // reduced row echelon form
  std::size_t dim() const { return basis.size(); }
};

std::size_t rank(const SparseMat& m, const PrimeField& f);
/// Basis of {v : m v = 0}.
std::vector<SparseVec> nullspace(const SparseMat& m, const PrimeField& f);
SparseVec mat_vec(const SparseMat& m, const SparseVec& v, const PrimeField& f);

/// Smallest subspace containing the seed and stable under every operator:
/// apply operators to new basis vectors and re-echelonise until the
/// dimension stops growing.
Subspace span_closure(std::span<const SparseVec> seed, std::span<const LinearOp> generators,
                      const PrimeField& f);

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pbv
