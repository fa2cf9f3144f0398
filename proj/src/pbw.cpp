#include "pbv/pbw.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pbv {

namespace {

// Root alpha_t + ... + alpha_j for 1-based t <= j.
int segment(const RootSystem& rs, int t, int j) {
  RootCoeffs c(static_cast<std::size_t>(rs.rank()), 0);
  for (int k = t; k <= j; ++k) c[static_cast<std::size_t>(k - 1)] = 1;
  int idx = rs.root_index(c);
  if (idx < 0) throw std::logic_error("segment is not a root");
  return idx;
}

int first_nonzero(const RootCoeffs& c) {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) return static_cast<int>(k);
  return -1;
}

int last_nonzero(const RootCoeffs& c) {
  for (std::size_t k = c.size(); k-- > 0;)
    if (c[k] != 0) return static_cast<int>(k);
  return -1;
}

// Increasing height; equal heights ordered by the reversed coefficient
// vector, largest first.
void sort_height_revlex(const RootSystem& rs, std::vector<int>& v) {
  std::stable_sort(v.begin(), v.end(), [&](int a, int b) {
    int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    RootCoeffs ra(rs.root(a).rbegin(), rs.root(a).rend());
    RootCoeffs rb(rs.root(b).rbegin(), rs.root(b).rend());
    return ra > rb;
  });
}

void move_to_back(std::vector<int>& row, int value) {
  auto it = std::find(row.begin(), row.end(), value);
  if (it == row.end()) return;
  row.erase(it);
  row.push_back(value);
}

std::vector<int> filter(const std::vector<int>& roots, const std::function<bool(int)>& keep) {
  std::vector<int> out;
  for (int r : roots)
    if (keep(r)) out.push_back(r);
  return out;
}

}  // namespace

MonomialOrder fallback_order(const RootSystem& rs, const std::vector<int>& roots) {
  MonomialOrder o;
  o.roots = roots;
  std::sort(o.roots.begin(), o.roots.end(), [&](int a, int b) {
    if (rs.height(a) != rs.height(b)) return rs.height(a) < rs.height(b);
    return rs.root(a) > rs.root(b);
  });
  if (!o.roots.empty()) o.rows.push_back(o.roots);
  return o;
}

MonomialOrder fix_order(const RootSystem& rs, const LeviDatum& levi) {
  const int n = rs.rank();
  const Shape shape = classify_shape(rs.type(), n, levi.I);
  const auto& U = levi.u_roots;
  MonomialOrder o;
  const int s_count = static_cast<int>(levi.I.size());
  const int s_first = levi.I.empty() ? 0 : levi.I.front() + 1;  // 1-based start of I

  switch (shape) {
    case Shape::None:
      return fallback_order(rs, U);
    case Shape::APrefix:
      for (int j = 1; j <= n; ++j) {
        std::vector<int> row;
        for (int t = 1; t <= std::min(j, s_count); ++t) row.push_back(segment(rs, t, j));
        o.rows.push_back(row);
      }
      break;
    case Shape::ASuffix:
      for (int j = 1; j <= n; ++j) {
        std::vector<int> row;
        for (int t = 1; t <= std::min(j, s_count); ++t) row.push_back(segment(rs, n + 1 - j, n + 1 - t));
        o.rows.push_back(row);
      }
      break;
    case Shape::BSuffix:
      for (int k = n; k >= 1; --k) {
        auto row = filter(U, [&](int r) { return first_nonzero(rs.root(r)) == k - 1; });
        sort_height_revlex(rs, row);
        if (k >= s_first) move_to_back(row, rs.simple_root_index(k - 1));
        o.rows.push_back(row);
      }
      break;
    case Shape::CPrefix:
      for (int j = 1; j <= n - 1; ++j) {
        auto row = filter(U, [&](int r) { return last_nonzero(rs.root(r)) == j - 1; });
        sort_height_revlex(rs, row);
        if (j <= s_count) move_to_back(row, rs.simple_root_index(j - 1));
        o.rows.push_back(row);
      }
      {
        auto row = filter(U, [&](int r) { return rs.root(r)[static_cast<std::size_t>(n - 1)] != 0; });
        sort_height_revlex(rs, row);
        o.rows.push_back(row);
      }
      break;
    case Shape::DSuffix:
      o.rows.push_back({rs.simple_root_index(n - 1), rs.simple_root_index(n - 2)});
      for (int k = n - 2; k >= 1; --k) {
        auto row = filter(U, [&](int r) { return first_nonzero(rs.root(r)) == k - 1; });
        sort_height_revlex(rs, row);
        if (k >= s_first) move_to_back(row, rs.simple_root_index(k - 1));
        o.rows.push_back(row);
      }
      break;
    case Shape::DAllButLast:
      for (int j = 1; j <= n - 1; ++j) {
        auto row = filter(U, [&](int r) {
          const auto& c = rs.root(r);
          return c[static_cast<std::size_t>(n - 1)] == 0 && last_nonzero(c) == j - 1;
        });
        sort_height_revlex(rs, row);
        move_to_back(row, rs.simple_root_index(j - 1));
        o.rows.push_back(row);
      }
      {
        auto row = filter(U, [&](int r) { return rs.root(r)[static_cast<std::size_t>(n - 1)] != 0; });
        sort_height_revlex(rs, row);
        o.rows.push_back(row);
      }
      break;
  }
  o.rows.erase(std::remove_if(o.rows.begin(), o.rows.end(), [](const auto& r) { return r.empty(); }), o.rows.end());
  for (const auto& row : o.rows) o.roots.insert(o.roots.end(), row.begin(), row.end());

  std::vector<int> a = o.roots, b = U;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end())
    throw std::logic_error("monomial order does not enumerate the nilradical roots");
  return o;
}

std::string format_order(const RootSystem& rs, const MonomialOrder& order) {
  std::string out;
  for (std::size_t r = 0; r < order.rows.size(); ++r) {
    if (r) out += "; ";
    for (std::size_t k = 0; k < order.rows[r].size(); ++k) {
      if (k) out += ", ";
      out += "y" + rs.root_name(order.rows[r][k]);
    }
  }
  return out;
}

BaseModule one_dimensional_base(const ChevalleyAlgebra& alg, const Weight& lambda, const PrimeField& f) {
  BaseModule b;
  b.dim = 1;
  b.ops.assign(static_cast<std::size_t>(alg.dim()), LinearOp());
  for (int i = 0; i < alg.rank(); ++i)
    b.ops[static_cast<std::size_t>(alg.h(i))] =
        LinearOp(1, {SparseVec::from_pairs(1, {{0, lambda[static_cast<std::size_t>(i)]}}, f)});
  b.depth.assign(1, RootCoeffs(static_cast<std::size_t>(alg.rank()), 0));
  return b;
}

PbwEngine::PbwEngine(InductionData data) : data_(std::move(data)) {
  const auto& alg = *data_.alg;
  const std::uint32_t p = data_.field.p();
  if (data_.base.dim == 0) throw std::invalid_argument("induced module needs a nonzero base module");
  if (data_.base.ops.size() != static_cast<std::size_t>(alg.dim()))
    throw std::invalid_argument("base module operator table has the wrong size");
  if (data_.active.empty()) data_.active.assign(static_cast<std::size_t>(alg.dim()), true);
  m_ = data_.u_roots.size();
  monomials_ = 1;
  for (std::size_t k = 0; k < m_; ++k) {
    if (monomials_ > (std::size_t{1} << 40) / p) throw std::length_error("induced module too large");
    monomials_ *= p;
  }
  dim_ = monomials_ * data_.base.dim;
  place_.assign(m_, 0);
  std::size_t stride = data_.base.dim;
  for (std::size_t k = m_; k-- > 0;) {
    place_[k] = stride;
    stride *= p;
  }
  position_.assign(static_cast<std::size_t>(alg.N()), -1);
  for (std::size_t k = 0; k < m_; ++k) position_[static_cast<std::size_t>(data_.u_roots[k])] = static_cast<int>(k);
  memo_.resize(static_cast<std::size_t>(alg.dim()));
  done_.resize(static_cast<std::size_t>(alg.dim()));
}

std::vector<int> PbwEngine::exponents(std::size_t idx) const {
  std::vector<int> e(m_);
  const std::uint32_t p = data_.field.p();
  std::size_t mono = idx / data_.base.dim;
  for (std::size_t k = m_; k-- > 0;) {
    e[k] = static_cast<int>(mono % p);
    mono /= p;
  }
  return e;
}

std::size_t PbwEngine::index_of(const std::vector<int>& exps, std::size_t levi) const {
  if (exps.size() != m_ || levi >= data_.base.dim) throw std::invalid_argument("malformed basis pair");
  std::size_t idx = levi;
  for (std::size_t k = 0; k < m_; ++k) {
    if (exps[k] < 0 || exps[k] >= static_cast<int>(data_.field.p())) throw std::invalid_argument("exponent out of range");
    idx += static_cast<std::size_t>(exps[k]) * place_[k];
  }
  return idx;
}

RootCoeffs PbwEngine::depth(std::size_t idx) const {
  const auto& rs = data_.alg->roots();
  RootCoeffs d = data_.base.depth[levi_index(idx)];
  auto e = exponents(idx);
  for (std::size_t k = 0; k < m_; ++k) {
    if (e[k] == 0) continue;
    const auto& g = rs.root(data_.u_roots[k]);
    for (std::size_t j = 0; j < d.size(); ++j) d[j] += e[k] * g[j];
  }
  return d;
}

const SparseVec& PbwEngine::act(int g, std::size_t idx) {
  if (idx >= dim_) throw std::out_of_range("basis index out of range");
  auto gi = static_cast<std::size_t>(g);
  if (!data_.active[gi]) throw std::invalid_argument("generator does not act on this module");
  if (memo_[gi].empty()) {
    memo_[gi].resize(dim_);
    done_[gi].assign(dim_, 0);
  }
  if (!done_[gi][idx]) {
    if (++depth_guard_ > 100000) {
      depth_guard_ = 0;
      throw RecursionLimit("straightening recursion too deep");
    }
    SparseVec v = compute(g, idx);
    --depth_guard_;
    memo_[gi][idx] = std::move(v);
    done_[gi][idx] = 1;
  }
  return memo_[gi][idx];
}

SparseVec PbwEngine::mono_zero(int g, std::size_t idx) const {
  const auto& alg = *data_.alg;
  const auto gi = static_cast<std::size_t>(g);
  if (data_.base.provides(g)) return data_.base.ops[gi].column(idx);
  auto b = alg.element(g);
  if (b.kind != BasisKind::H) {
    int pos = position_[static_cast<std::size_t>(b.index)];
    if (pos >= 0) {
      if (b.kind == BasisKind::X) return SparseVec(dim_);
      return SparseVec::unit(dim_, static_cast<std::uint32_t>(idx + place_[static_cast<std::size_t>(pos)]));
    }
  }
  throw std::logic_error("no action defined for " + alg.name(g) + " on the base module");
}

SparseVec PbwEngine::compute(int g, std::size_t idx) {
  const auto& alg = *data_.alg;
  const PrimeField& f = data_.field;
  const std::uint32_t p = f.p();

  std::size_t mono = idx / data_.base.dim;
  if (mono == 0) {
    SparseVec local = mono_zero(g, idx);
    if (local.dim() == dim_) return local;
    SparseVec out(dim_);
    for (const auto& e : local.entries()) out.push_back_unchecked(e.index, e.value);
    return out;
  }
  // leading factor: first nonzero exponent
  auto e = exponents(idx);
  std::size_t k = 0;
  while (e[k] == 0) ++k;
  const int gamma = data_.u_roots[k];
  const int y_gamma = alg.y(gamma);

  auto b = alg.element(g);
  if (b.kind == BasisKind::Y) {
    int pos = position_[static_cast<std::size_t>(b.index)];
    if (pos >= 0 && static_cast<std::size_t>(pos) < k)
      return SparseVec::unit(dim_, static_cast<std::uint32_t>(idx + place_[static_cast<std::size_t>(pos)]));
    if (pos >= 0 && static_cast<std::size_t>(pos) == k) {
      if (e[k] + 1 < static_cast<int>(p)) return SparseVec::unit(dim_, static_cast<std::uint32_t>(idx + place_[k]));
      Scalar c = data_.chi.wrap_scalar(alg.roots(), gamma);
      if (c == 0) return SparseVec(dim_);
      return SparseVec::unit(dim_, static_cast<std::uint32_t>(idx - static_cast<std::size_t>(p - 1) * place_[k]), c);
    }
  }

  // g y_gamma w = [g, y_gamma] w + y_gamma (g w)
  const std::size_t w = idx - place_[k];
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
  for (const auto& [c, coef] : alg.bracket(g, y_gamma)) {
    Scalar cf = f.reduce(coef);
    if (cf == 0) continue;
    for (const auto& t : act(c, w).entries()) terms.emplace_back(t.index, f.mul(cf, t.value));
  }
  SparseVec gw = act(g, w);
  for (const auto& t : gw.entries())
    for (const auto& u : act(y_gamma, t.index).entries()) terms.emplace_back(u.index, f.mul(t.value, u.value));
  return SparseVec::from_pairs(dim_, std::move(terms), f);
}

LinearOp PbwEngine::matrix(int g) {
  std::vector<SparseVec> cols;
  cols.reserve(dim_);
  for (std::size_t j = 0; j < dim_; ++j) cols.push_back(act(g, j));
  return LinearOp(dim_, std::move(cols));
}

std::string export_triplets(const LinearOp& op) {
  std::ostringstream os;
  for (std::size_t j = 0; j < op.dim_in(); ++j)
    for (const auto& e : op.column(j).entries()) os << e.index << " " << j << " " << e.value << "\n";
  return os.str();
}

}  // namespace pbv
