#include "pbv/exactlin.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace pbv {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (p > (1u << 30)) throw std::invalid_argument("characteristic too large");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
  // extended Euclid
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t);
}

// ---------------------------------------------------------------- SparseVec

SparseVec SparseVec::from_pairs(std::size_t dim, std::vector<std::pair<std::uint32_t, std::int64_t>> pairs,
                                const PrimeField& f) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec v(dim);
  std::size_t i = 0;
  while (i < pairs.size()) {
    std::uint32_t idx = pairs[i].first;
    if (idx >= dim) throw DimensionMismatch("sparse index out of range");
    Scalar acc = 0;
    for (; i < pairs.size() && pairs[i].first == idx; ++i) acc = f.add(acc, f.reduce(pairs[i].second));
    if (acc != 0) v.entries_.push_back({idx, acc});
  }
  return v;
}

SparseVec SparseVec::unit(std::size_t dim, std::uint32_t index, Scalar value) {
  if (index >= dim) throw DimensionMismatch("unit vector index out of range");
  SparseVec v(dim);
  if (value != 0) v.entries_.push_back({index, value});
  return v;
}

Scalar SparseVec::at(std::uint32_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const SparseEntry& e, std::uint32_t i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->value : 0;
}

SparseVec SparseVec::scaled(Scalar c, const PrimeField& f) const {
  SparseVec out(dim_);
  if (c == 0) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& e : entries_) out.entries_.push_back({e.index, f.mul(e.value, c)});
  return out;
}

SparseVec axpy(const SparseVec& a, Scalar c, const SparseVec& b, const PrimeField& f) {
  if (a.dim() != b.dim()) throw DimensionMismatch("axpy: dimension mismatch");
  SparseVec out(a.dim());
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].index < eb[j].index)) {
      out.push_back_unchecked(ea[i].index, ea[i].value);
      ++i;
    } else if (i == ea.size() || eb[j].index < ea[i].index) {
      Scalar v = f.mul(c, eb[j].value);
      if (v != 0) out.push_back_unchecked(eb[j].index, v);
      ++j;
    } else {
      Scalar v = f.add(ea[i].value, f.mul(c, eb[j].value));
      if (v != 0) out.push_back_unchecked(ea[i].index, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec add(const SparseVec& a, const SparseVec& b, const PrimeField& f) { return axpy(a, 1, b, f); }

// -------------------------------------------------------------- Accumulator

void Accumulator::add(std::uint32_t index, Scalar value) {
  if (value == 0) return;
  if (dense_[index] == 0) touched_.push_back(index);
  dense_[index] = f_.add(dense_[index], value);
  // a cancellation to zero leaves the index in touched_; take() filters it
}

void Accumulator::add_scaled(const SparseVec& v, Scalar c) {
  if (c == 0) return;
  for (const auto& e : v.entries()) add(e.index, f_.mul(c, e.value));
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
  SparseVec out(dense_.size());
  for (auto idx : touched_) {
    if (dense_[idx] != 0) out.push_back_unchecked(idx, dense_[idx]);
    dense_[idx] = 0;
  }
  touched_.clear();
  return out;
}

// ----------------------------------------------------------------- LinearOp

LinearOp::LinearOp(std::size_t dim_out, std::vector<SparseVec> columns)
    : dim_out_(dim_out), columns_(std::move(columns)) {
  for (const auto& c : columns_)
    if (c.dim() != dim_out_) throw DimensionMismatch("LinearOp: column dimension mismatch");
}

SparseVec LinearOp::apply(const SparseVec& v, const PrimeField& f) const {
  if (v.dim() != dim_in()) throw DimensionMismatch("LinearOp::apply: dimension mismatch");
  if (v.nnz() == 1) return columns_[v.entries()[0].index].scaled(v.entries()[0].value, f);
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
  for (const auto& e : v.entries())
    for (const auto& c : columns_[e.index].entries()) terms.emplace_back(c.index, f.mul(e.value, c.value));
  return SparseVec::from_pairs(dim_out_, std::move(terms), f);
}

std::size_t LinearOp::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

SparseMat to_rows(const LinearOp& op) {
  std::vector<std::vector<SparseEntry>> rows(op.dim_out());
  for (std::size_t j = 0; j < op.dim_in(); ++j)
    for (const auto& e : op.column(j).entries()) rows[e.index].push_back({static_cast<std::uint32_t>(j), e.value});
  SparseMat m;
  m.ncols = op.dim_in();
  m.rows.reserve(rows.size());
  for (auto& r : rows) {
    SparseVec v(op.dim_in());
    for (const auto& e : r) v.push_back_unchecked(e.index, e.value);
    m.rows.push_back(std::move(v));
  }
  return m;
}

LinearOp from_rows(const SparseMat& m) {
  std::vector<std::vector<SparseEntry>> cols(m.ncols);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (m.rows[i].dim() != m.ncols) throw DimensionMismatch("SparseMat row dimension mismatch");
    for (const auto& e : m.rows[i].entries()) cols[e.index].push_back({static_cast<std::uint32_t>(i), e.value});
  }
  std::vector<SparseVec> columns;
  columns.reserve(m.ncols);
  for (auto& c : cols) {
    SparseVec v(m.rows.size());
    for (const auto& e : c) v.push_back_unchecked(e.index, e.value);
    columns.push_back(std::move(v));
  }
  return LinearOp(m.rows.size(), std::move(columns));
}

LinearOp compose(const LinearOp& a, const LinearOp& b, const PrimeField& f) {
  if (a.dim_in() != b.dim_out()) throw DimensionMismatch("compose: dimension mismatch");
  std::vector<SparseVec> cols;
  cols.reserve(b.dim_in());
  for (const auto& c : b.columns()) cols.push_back(a.apply(c, f));
  return LinearOp(a.dim_out(), std::move(cols));
}

LinearOp identity_op(std::size_t dim) { return scaled_identity_op(dim, 1); }

LinearOp scaled_identity_op(std::size_t dim, Scalar c) {
  std::vector<SparseVec> cols;
  cols.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    SparseVec v(dim);
    if (c != 0) v.push_back_unchecked(static_cast<std::uint32_t>(j), c);
    cols.push_back(std::move(v));
  }
  return LinearOp(dim, std::move(cols));
}

LinearOp op_sub(const LinearOp& a, const LinearOp& b, const PrimeField& f) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) throw DimensionMismatch("op_sub: shape mismatch");
  std::vector<SparseVec> cols;
  cols.reserve(a.dim_in());
  for (std::size_t j = 0; j < a.dim_in(); ++j) cols.push_back(axpy(a.column(j), f.neg(1), b.column(j), f));
  return LinearOp(a.dim_out(), std::move(cols));
}

LinearOp op_power(const LinearOp& a, std::uint64_t e, const PrimeField& f) {
  if (a.dim_in() != a.dim_out()) throw DimensionMismatch("op_power: operator is not square");
  LinearOp result = identity_op(a.dim_in());
  for (std::uint64_t i = 0; i < e; ++i) result = compose(a, result, f);
  return result;
}

// ------------------------------------------------------------- EchelonBasis

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
  if (v.dim() != dim_) throw DimensionMismatch("EchelonBasis::reduce: dimension mismatch");
  SparseVec cur = v;
  // Each subtraction only touches indices >= the pivot, so scanning left to
  // right with a moving cursor visits every pivot at most once.
  std::size_t pos = 0;
  while (pos < cur.nnz()) {
    const auto e = cur.entries()[pos];
    auto it = rows_.find(e.index);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    cur = axpy(cur, f_.neg(e.value), it->second, f_);
    // entries before pos are untouched; the pivot entry itself vanished
  }
  return cur;
}

bool EchelonBasis::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  Scalar lead = r.entries().front().value;
  std::uint32_t pivot = r.entries().front().index;
  rows_.emplace(pivot, r.scaled(f_.inv(lead), f_));
  return true;
}

std::vector<SparseVec> EchelonBasis::basis() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [piv, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::uint32_t> EchelonBasis::pivots() const {
  std::vector<std::uint32_t> out;
  out.reserve(rows_.size());
  for (const auto& [piv, row] : rows_) out.push_back(piv);
  return out;
}

std::vector<SparseVec> EchelonBasis::rref() const {
  // Back-substitute from the rightmost pivot so every row is cleared at
  // every later pivot column.
  std::map<std::uint32_t, SparseVec> reduced;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec cur = it->second;
    std::size_t pos = 1;
    while (pos < cur.nnz()) {
      const auto e = cur.entries()[pos];
      auto r = reduced.find(e.index);
      if (r == reduced.end()) {
        ++pos;
        continue;
      }
      cur = axpy(cur, f_.neg(e.value), r->second, f_);
    }
    reduced.emplace(it->first, std::move(cur));
  }
  std::vector<SparseVec> out;
  out.reserve(reduced.size());
  for (auto& [piv, row] : reduced) out.push_back(std::move(row));
  return out;
}

// ------------------------------------------------------------- DenseEchelon

void DenseEchelon::reduce_in_place(std::vector<Scalar>& v) const {
  for (std::size_t c = 0; c < dim_; ++c) {
    if (v[c] == 0) continue;
    auto r = row_of_pivot_[c];
    if (r < 0) continue;
    const auto& row = rows_[static_cast<std::size_t>(r)];
    Scalar factor = f_.neg(v[c]);
    for (std::size_t k = c; k < dim_; ++k)
      if (row[k] != 0) v[k] = f_.add(v[k], f_.mul(factor, row[k]));
  }
}

bool DenseEchelon::insert(std::vector<Scalar> v) {
  if (v.size() != dim_) throw DimensionMismatch("DenseEchelon::insert: dimension mismatch");
  reduce_in_place(v);
  std::size_t c = 0;
  while (c < dim_ && v[c] == 0) ++c;
  if (c == dim_) return false;
  Scalar inv = f_.inv(v[c]);
  for (std::size_t k = c; k < dim_; ++k) v[k] = f_.mul(v[k], inv);
  row_of_pivot_[c] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::vector<Scalar>> DenseEchelon::nullspace() const {
  // Bring the stored rows to reduced form, then read off one kernel vector
  // per free column.
  std::vector<std::vector<Scalar>> red = rows_;
  std::vector<std::size_t> pivot_of_row(red.size());
  for (std::size_t c = 0; c < dim_; ++c)
    if (row_of_pivot_[c] >= 0) pivot_of_row[static_cast<std::size_t>(row_of_pivot_[c])] = c;
  for (std::size_t c = dim_; c-- > 0;) {
    auto r = row_of_pivot_[c];
    if (r < 0) continue;
    const auto& prow = red[static_cast<std::size_t>(r)];
    for (std::size_t other = 0; other < red.size(); ++other) {
      if (other == static_cast<std::size_t>(r)) continue;
      Scalar x = red[other][c];
      if (x == 0) continue;
      Scalar factor = f_.neg(x);
      for (std::size_t k = c; k < dim_; ++k)
        if (prow[k] != 0) red[other][k] = f_.add(red[other][k], f_.mul(factor, prow[k]));
    }
  }
  std::vector<std::vector<Scalar>> kernel;
  for (std::size_t free = 0; free < dim_; ++free) {
    if (row_of_pivot_[free] >= 0) continue;
    std::vector<Scalar> v(dim_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < red.size(); ++r) v[pivot_of_row[r]] = f_.neg(red[r][free]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// --------------------------------------------------------- matrix functions

std::size_t rank(const SparseMat& m, const PrimeField& f) {
  EchelonBasis e(m.ncols, f);
  for (const auto& row : m.rows) e.insert(row);
  return e.rank();
}

std::vector<SparseVec> nullspace(const SparseMat& m, const PrimeField& f) {
  EchelonBasis e(m.ncols, f);
  for (const auto& row : m.rows) {
    if (row.dim() != m.ncols) throw DimensionMismatch("nullspace: row dimension mismatch");
    e.insert(row);
  }
  auto rows = e.rref();
  auto piv = e.pivots();
  std::vector<bool> is_pivot(m.ncols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<SparseVec> kernel;
  for (std::uint32_t free = 0; free < m.ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::pair<std::uint32_t, std::int64_t>> terms{{free, 1}};
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Scalar x = rows[r].at(free);
      if (x != 0) terms.emplace_back(piv[r], f.neg(x));
    }
    kernel.push_back(SparseVec::from_pairs(m.ncols, std::move(terms), f));
  }
  return kernel;
}

SparseVec mat_vec(const SparseMat& m, const SparseVec& v, const PrimeField& f) {
  if (v.dim() != m.ncols) throw DimensionMismatch("mat_vec: dimension mismatch");
  SparseVec out(m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    Scalar acc = 0;
    const auto& a = m.rows[i].entries();
    const auto& b = v.entries();
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
      if (a[x].index < b[y].index) ++x;
      else if (b[y].index < a[x].index) ++y;
      else acc = f.add(acc, f.mul(a[x++].value, b[y++].value));
    }
    if (acc != 0) out.push_back_unchecked(static_cast<std::uint32_t>(i), acc);
  }
  return out;
}

Subspace span_closure(std::span<const SparseVec> seed, std::span<const LinearOp> generators, const PrimeField& f) {
  std::size_t dim = 0;
  if (!seed.empty()) dim = seed.front().dim();
  else if (!generators.empty()) dim = generators.front().dim_in();
  for (const auto& g : generators)
    if (g.dim_in() != dim || g.dim_out() != dim) throw DimensionMismatch("span_closure: generator shape mismatch");
  for (const auto& s : seed)
    if (s.dim() != dim) throw DimensionMismatch("span_closure: seed dimension mismatch");

  EchelonBasis basis(dim, f);
  std::deque<SparseVec> pending;
  for (const auto& s : seed) {
    auto r = basis.reduce(s);
    if (!r.empty() && basis.insert(r)) pending.push_back(std::move(r));
  }
  while (!pending.empty() && basis.rank() < dim) {
    SparseVec v = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : generators) {
      auto r = basis.reduce(g.apply(v, f));
      if (r.empty()) continue;
      basis.insert(r);
      pending.push_back(std::move(r));
    }
  }
  return Subspace{dim, basis.rref()};
}

}  // namespace pbv
