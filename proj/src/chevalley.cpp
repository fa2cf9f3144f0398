#include "pbv/chevalley.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pbv {

namespace {

using Q = boost::rational<long long>;

struct Mat {
  int d = 0;
  std::vector<Q> a;
  explicit Mat(int dim = 0) : d(dim), a(static_cast<std::size_t>(dim * dim), Q(0)) {}
  Q& operator()(int i, int j) { return a[static_cast<std::size_t>(i * d + j)]; }
  const Q& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * d + j)]; }
  bool is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Q& x) { return x.numerator() == 0; });
  }
};

Mat unit(int d, int i, int j, Q c = 1) {
  Mat m(d);
  m(i, j) = c;
  return m;
}

Mat operator+(const Mat& x, const Mat& y) {
  Mat m(x.d);
  for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = x.a[k] + y.a[k];
  return m;
}

Mat operator-(const Mat& x, const Mat& y) {
  Mat m(x.d);
  for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = x.a[k] - y.a[k];
  return m;
}

Mat operator*(Q c, const Mat& x) {
  Mat m(x.d);
  for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] = c * x.a[k];
  return m;
}

Mat mul(const Mat& x, const Mat& y) {
  Mat m(x.d);
  for (int i = 0; i < x.d; ++i)
    for (int k = 0; k < x.d; ++k) {
      if (x(i, k).numerator() == 0) continue;
      for (int j = 0; j < x.d; ++j)
        if (y(k, j).numerator() != 0) m(i, j) += x(i, k) * y(k, j);
    }
  return m;
}

Mat comm(const Mat& x, const Mat& y) { return mul(x, y) - mul(y, x); }

Mat transpose(const Mat& x) {
  Mat m(x.d);
  for (int i = 0; i < x.d; ++i)
    for (int j = 0; j < x.d; ++j) m(j, i) = x(i, j);
  return m;
}

// Simple root vectors e_i, f_i in the defining representation.
void defining_generators(const RootSystem& rs, std::vector<Mat>& e, std::vector<Mat>& f) {
  const int n = rs.rank();
  e.clear();
  f.clear();
  switch (rs.type()) {
    case RootType::A: {
      int d = n + 1;
      for (int i = 0; i < n; ++i) e.push_back(unit(d, i, i + 1));
      break;
    }
    case RootType::C: {
      int d = 2 * n;
      for (int i = 0; i + 1 < n; ++i) e.push_back(unit(d, i, i + 1) - unit(d, n + i + 1, n + i));
      e.push_back(unit(d, n - 1, 2 * n - 1));
      break;
    }
    case RootType::B: {
      int d = 2 * n + 1;
      for (int i = 0; i + 1 < n; ++i) e.push_back(unit(d, i + 1, i + 2) - unit(d, n + i + 2, n + i + 1));
      e.push_back(unit(d, n, 0) - unit(d, 0, 2 * n));
      break;
    }
    case RootType::D: {
      int d = 2 * n;
      for (int i = 0; i + 1 < n; ++i) e.push_back(unit(d, i, i + 1) - unit(d, n + i + 1, n + i));
      e.push_back(unit(d, n - 2, 2 * n - 1) - unit(d, n - 1, 2 * n - 2));
      break;
    }
  }
  for (const auto& m : e) f.push_back(transpose(m));
  if (rs.type() == RootType::B) {
    int d = 2 * n + 1;
    f[static_cast<std::size_t>(n - 1)] = Q(2) * (unit(d, 0, n) - unit(d, 2 * n, 0));
  }
}

// Scalar c with m == c * target, or throws.
Q ratio(const Mat& m, const Mat& target) {
  Q c = 0;
  bool found = false;
  for (std::size_t k = 0; k < target.a.size(); ++k)
    if (target.a[k].numerator() != 0) {
      c = m.a[k] / target.a[k];
      found = true;
      break;
    }
  if (!found) throw std::logic_error("zero target matrix");
  for (std::size_t k = 0; k < target.a.size(); ++k)
    if (m.a[k] != c * target.a[k]) throw std::logic_error("bracket is not a multiple of the expected basis element");
  return c;
}

std::int64_t integral(Q c) {
  if (c.denominator() != 1) throw std::logic_error("non-integral structure constant");
  return c.numerator();
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs, SignConvention signs)
    : rs_(std::move(rs)), signs_(signs), N_(rs_.N()), n_(rs_.rank()) {
  std::vector<Mat> e, f;
  defining_generators(rs_, e, f);
  std::vector<Mat> H;
  for (int i = 0; i < n_; ++i) H.push_back(comm(e[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i)]));

  std::vector<Mat> X(static_cast<std::size_t>(N_)), Y(static_cast<std::size_t>(N_));
  for (int k = 0; k < N_; ++k) {
    int s = rs_.simple_of(k);
    if (s >= 0) {
      X[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(s)];
      Y[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(s)];
      continue;
    }
    const auto& xi = rs_.root(k);
    for (int i = 0; i < n_; ++i) {
      RootCoeffs beta = xi;
      beta[static_cast<std::size_t>(i)] -= 1;
      int b = rs_.root_index(beta);
      if (b < 0) continue;
      int q = rs_.string_down(rs_.simple_root_index(i), b);
      Q sign = (signs_ == SignConvention::Flipped && rs_.height(k) % 2 == 0) ? Q(-1) : Q(1);
      Q scale = sign / Q(q + 1);
      X[static_cast<std::size_t>(k)] = scale * comm(e[static_cast<std::size_t>(i)], X[static_cast<std::size_t>(b)]);
      Y[static_cast<std::size_t>(k)] = (-scale) * comm(f[static_cast<std::size_t>(i)], Y[static_cast<std::size_t>(b)]);
      break;
    }
  }

  auto matrix_of = [&](int id) -> const Mat& {
    if (id < N_) return X[static_cast<std::size_t>(id)];
    if (id < 2 * N_) return Y[static_cast<std::size_t>(id - N_)];
    return H[static_cast<std::size_t>(id - 2 * N_)];
  };

  const int D = dim();
  table_.assign(static_cast<std::size_t>(D * D), {});
  for (int a = 0; a < D; ++a)
    for (int b = a + 1; b < D; ++b) {
      Mat m = comm(matrix_of(a), matrix_of(b));
      RootCoeffs deg = add(degree(a), degree(b));
      IntCombination out;
      bool zero_degree = std::all_of(deg.begin(), deg.end(), [](std::int64_t v) { return v == 0; });
      if (zero_degree) {
        auto ea = element(a), eb = element(b);
        if (ea.kind == BasisKind::X && eb.kind == BasisKind::Y) {
          // [x_alpha, y_alpha] is the coroot h_alpha
          const auto& cv = rs_.coroot(ea.index);
          Mat expect(m.d);
          for (int j = 0; j < n_; ++j)
            if (cv[static_cast<std::size_t>(j)] != 0) {
              out.emplace_back(h(j), cv[static_cast<std::size_t>(j)]);
              expect = expect + Q(cv[static_cast<std::size_t>(j)]) * H[static_cast<std::size_t>(j)];
            }
          if (!(m - expect).is_zero()) throw std::logic_error("[x_a, y_a] differs from the coroot");
        } else if (!m.is_zero()) {
          throw std::logic_error("unexpected nonzero bracket in degree zero");
        }
      } else {
        int pos = rs_.root_index(deg);
        RootCoeffs neg = deg;
        for (auto& v : neg) v = -v;
        int negpos = rs_.root_index(neg);
        if (pos >= 0) {
          auto c = integral(ratio(m, X[static_cast<std::size_t>(pos)]));
          if (c != 0) out.emplace_back(x(pos), c);
        } else if (negpos >= 0) {
          auto c = integral(ratio(m, Y[static_cast<std::size_t>(negpos)]));
          if (c != 0) out.emplace_back(y(negpos), c);
        } else if (!m.is_zero()) {
          throw std::logic_error("bracket outside the root grading");
        }
      }
      std::sort(out.begin(), out.end());
      IntCombination neg_out = out;
      for (auto& [id, c] : neg_out) c = -c;
      table_[static_cast<std::size_t>(a * D + b)] = std::move(out);
      table_[static_cast<std::size_t>(b * D + a)] = std::move(neg_out);
    }

  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      IntCombination want;
      if (rs_.cartan(i, j) != 0) want.emplace_back(x(rs_.simple_root_index(j)), rs_.cartan(i, j));
      if (bracket(h(i), x(rs_.simple_root_index(j))) != want)
        throw std::logic_error("Cartan matrix mismatch in the defining representation");
    }
}

BasisElement ChevalleyAlgebra::element(int id) const {
  if (id < 0 || id >= dim()) throw std::out_of_range("basis id out of range");
  if (id < N_) return {BasisKind::X, id};
  if (id < 2 * N_) return {BasisKind::Y, id - N_};
  return {BasisKind::H, id - 2 * N_};
}

int ChevalleyAlgebra::id(const BasisElement& b) const {
  switch (b.kind) {
    case BasisKind::X: return x(b.index);
    case BasisKind::Y: return y(b.index);
    case BasisKind::H: return h(b.index);
  }
  return -1;
}

RootCoeffs ChevalleyAlgebra::degree(int id) const {
  auto b = element(id);
  if (b.kind == BasisKind::H) return RootCoeffs(static_cast<std::size_t>(n_), 0);
  RootCoeffs c = rs_.root(b.index);
  if (b.kind == BasisKind::Y)
    for (auto& v : c) v = -v;
  return c;
}

std::int64_t ChevalleyAlgebra::structure_constant(int alpha, int beta) const {
  for (const auto& [id, c] : bracket(x(alpha), x(beta)))
    if (id < N_) return c;
  return 0;
}

IntCombination ChevalleyAlgebra::p_power(int id) const {
  if (element(id).kind == BasisKind::H) return {{id, 1}};
  return {};
}

std::string ChevalleyAlgebra::name(int id) const {
  auto b = element(id);
  switch (b.kind) {
    case BasisKind::X: return "x" + rs_.root_name(b.index);
    case BasisKind::Y: return "y" + rs_.root_name(b.index);
    case BasisKind::H: return "h" + std::to_string(b.index + 1);
  }
  return "?";
}

std::string ChevalleyAlgebra::export_brackets() const {
  std::ostringstream os;
  for (int a = 0; a < dim(); ++a)
    for (int b = a + 1; b < dim(); ++b) {
      const auto& comb = bracket(a, b);
      if (comb.empty()) continue;
      os << "(" << name(a) << ", " << name(b) << ") -> ";
      for (std::size_t k = 0; k < comb.size(); ++k) {
        if (k) os << " + ";
        os << comb[k].second << "*" << name(comb[k].first);
      }
      os << "\n";
    }
  return os.str();
}

ChevalleyAlgebra build_algebra(const RootSystem& rs, SignConvention signs) { return ChevalleyAlgebra(rs, signs); }

LinearOp adjoint_op(const ChevalleyAlgebra& alg, int id, const PrimeField& f) {
  std::vector<SparseVec> cols;
  cols.reserve(static_cast<std::size_t>(alg.dim()));
  for (int b = 0; b < alg.dim(); ++b) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> terms;
    for (const auto& [t, c] : alg.bracket(id, b)) terms.emplace_back(static_cast<std::uint32_t>(t), c);
    cols.push_back(SparseVec::from_pairs(static_cast<std::size_t>(alg.dim()), std::move(terms), f));
  }
  return LinearOp(static_cast<std::size_t>(alg.dim()), std::move(cols));
}

PChar::PChar(std::vector<int> I, std::vector<Scalar> values, std::uint32_t p, int rank)
    : I_(std::move(I)), values_(std::move(values)), p_(p) {
  if (I_.size() != values_.size()) throw std::invalid_argument("p-character: one value per element of I");
  by_simple_.assign(static_cast<std::size_t>(rank), 0);
  for (std::size_t k = 0; k < I_.size(); ++k) {
    if (I_[k] < 0 || I_[k] >= rank) throw std::invalid_argument("p-character: simple index out of range");
    if (values_[k] == 0) throw std::invalid_argument("p-character: chi(y_alpha) must be nonzero on I");
    by_simple_[static_cast<std::size_t>(I_[k])] = values_[k];
  }
}

Scalar PChar::wrap_scalar(const RootSystem& rs, int root) const {
  int i = rs.simple_of(root);
  if (i < 0 || by_simple_.empty()) return 0;
  Scalar c = by_simple_[static_cast<std::size_t>(i)];
  if (c == 0) return 0;
  return PrimeField(p_).pow(c, p_);
}

PChar make_pchar(const ChevalleyAlgebra& alg, const std::vector<int>& I, const std::vector<std::int64_t>& values,
                 const PrimeField& f) {
  std::vector<int> sorted = I;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("p-character: repeated index in I");
  if (!values.empty() && values.size() != I.size())
    throw std::invalid_argument("p-character: one value per element of I");
  std::vector<std::pair<int, Scalar>> pairs;
  for (std::size_t k = 0; k < I.size(); ++k) {
    Scalar v = values.empty() ? 1 : f.reduce(values[k]);
    if (v == 0) throw std::invalid_argument("p-character: chi(y_alpha) must be nonzero on I");
    pairs.emplace_back(I[k], v);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<int> idx;
  std::vector<Scalar> vals;
  for (auto& [i, v] : pairs) {
    idx.push_back(i);
    vals.push_back(v);
  }
  return PChar(std::move(idx), std::move(vals), f.p(), alg.rank());
}

}  // namespace pbv
