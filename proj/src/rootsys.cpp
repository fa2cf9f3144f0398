#include "pbv/rootsys.hpp"

#include "pbv/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pbv {

char type_letter(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
  }
  return '?';
}

RootType parse_root_type(const std::string& s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return RootType::A;
      case 'B': return RootType::B;
      case 'C': return RootType::C;
      case 'D': return RootType::D;
      default: break;
    }
  }
  throw std::invalid_argument("unsupported root system type '" + s + "'");
}

namespace {

std::vector<IntVec> gram_matrix(RootType type, int n) {
  std::vector<IntVec> g(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
  auto at = [&](int i, int j) -> std::int64_t& { return g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  switch (type) {
    case RootType::A:
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      break;
    case RootType::B:
      for (int i = 0; i < n; ++i) at(i, i) = (i == n - 1) ? 2 : 4;
      for (int i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -2;
      break;
    case RootType::C:
      for (int i = 0; i < n; ++i) at(i, i) = (i == n - 1) ? 4 : 2;
      for (int i = 0; i + 2 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(n - 2, n - 1) = at(n - 1, n - 2) = -2;
      break;
    case RootType::D:
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
      at(n - 3, n - 1) = at(n - 1, n - 3) = -1;
      break;
  }
  return g;
}

}  // namespace

RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank) {
  int min_rank = (type == RootType::A) ? 1 : (type == RootType::D ? 4 : 2);
  if (rank < min_rank || rank > 8)
    throw std::invalid_argument(std::string("unsupported root system ") + type_letter(type) + std::to_string(rank));
  const auto n = static_cast<std::size_t>(rank);
  gram_ = gram_matrix(type, rank);
  cartan_.assign(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan_[i][j] = 2 * gram_[j][i] / gram_[i][i];

  std::set<RootCoeffs> seen;
  std::vector<RootCoeffs> level;
  for (std::size_t i = 0; i < n; ++i) {
    RootCoeffs c(n, 0);
    c[i] = 1;
    level.push_back(c);
    seen.insert(c);
  }
  std::vector<RootCoeffs> all;
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    std::set<RootCoeffs> next;
    for (const auto& beta : level) {
      for (int i = 0; i < rank; ++i) {
        int down = 0;
        RootCoeffs probe = beta;
        while (true) {
          probe[static_cast<std::size_t>(i)] -= 1;
          if (!seen.count(probe)) break;
          ++down;
        }
        std::int64_t q = down - root_pairing(beta, i);
        if (q > 0) {
          RootCoeffs up = beta;
          up[static_cast<std::size_t>(i)] += 1;
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) seen.insert(r);
  }
  auto height_of = [](const RootCoeffs& c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); };
  std::sort(all.begin(), all.end(), [&](const RootCoeffs& a, const RootCoeffs& b) {
    auto ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  positive_ = std::move(all);
  for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(positive_[k], static_cast<int>(k));

  simple_index_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    RootCoeffs c(n, 0);
    c[i] = 1;
    simple_index_[i] = root_index(c);
  }
  for (const auto& beta : positive_) {
    std::int64_t len = squared_length(beta);
    IntVec cv(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t num = beta[j] * gram_[j][j];
      if (num % len != 0) throw std::logic_error("non-integral coroot");
      cv[j] = num / len;
    }
    coroots_.push_back(std::move(cv));
  }
}

std::string RootSystem::label() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

int RootSystem::coxeter_number() const {
  switch (type_) {
    case RootType::A: return rank_ + 1;
    case RootType::B:
    case RootType::C: return 2 * rank_;
    case RootType::D: return 2 * rank_ - 2;
  }
  return 0;
}

int RootSystem::root_index(const RootCoeffs& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const RootCoeffs& c) const {
  if (root_index(c) >= 0) return true;
  RootCoeffs neg = c;
  for (auto& x : neg) x = -x;
  return root_index(neg) >= 0;
}

int RootSystem::simple_of(int index) const {
  for (int i = 0; i < rank_; ++i)
    if (simple_index_[static_cast<std::size_t>(i)] == index) return i;
  return -1;
}

int RootSystem::height(int index) const {
  const auto& c = root(index);
  return static_cast<int>(std::accumulate(c.begin(), c.end(), std::int64_t{0}));
}

std::int64_t RootSystem::squared_length(const RootCoeffs& c) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += c[static_cast<std::size_t>(i)] * gram(i, j) * c[static_cast<std::size_t>(j)];
  return s;
}

Weight RootSystem::root_as_weight(const RootCoeffs& c) const {
  Weight w(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[static_cast<std::size_t>(i)] += cartan(i, j) * c[static_cast<std::size_t>(j)];
  return w;
}

std::int64_t RootSystem::root_pairing(const RootCoeffs& beta, int i) const {
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += beta[static_cast<std::size_t>(j)] * cartan(i, j);
  return s;
}

std::int64_t RootSystem::pairing(const Weight& lambda, const RootCoeffs& beta) const {
  if (lambda.size() != static_cast<std::size_t>(rank_)) throw std::invalid_argument("weight has wrong rank");
  int idx = root_index(beta);
  std::int64_t sign = 1;
  if (idx < 0) {
    RootCoeffs neg = beta;
    for (auto& x : neg) x = -x;
    idx = root_index(neg);
    sign = -1;
  }
  if (idx < 0) throw std::invalid_argument("pairing: " + format_weight(beta) + " is not a root");
  const auto& cv = coroot(idx);
  std::int64_t s = 0;
  for (std::size_t j = 0; j < cv.size(); ++j) s += cv[j] * lambda[j];
  return sign * s;
}

int RootSystem::string_down(int alpha, int beta) const {
  RootCoeffs probe = root(beta);
  const auto& a = root(alpha);
  int q = 0;
  while (true) {
    for (std::size_t j = 0; j < probe.size(); ++j) probe[j] -= a[j];
    if (!is_root(probe)) return q;
    ++q;
  }
}

std::string RootSystem::root_name(int index) const { return format_weight(root(index)); }

RootSystem build_root_system(RootType type, int rank) { return RootSystem(type, rank); }

bool in_first_dominant_alcove(const RootSystem& rs, const Weight& lambda, std::uint32_t p) {
  Weight mu = add(lambda, rs.rho());
  for (const auto& beta : rs.positive_roots()) {
    auto v = rs.pairing(mu, beta);
    if (v < 0 || v >= static_cast<std::int64_t>(p)) return false;
  }
  return true;
}

bool is_p_regular(const RootSystem& rs, const Weight& lambda, std::uint32_t p) {
  Weight mu = add(lambda, rs.rho());
  for (const auto& beta : rs.positive_roots())
    if (rs.pairing(mu, beta) % static_cast<std::int64_t>(p) == 0) return false;
  return true;
}

WeylWord simple_word(const RootSystem& rs, const std::vector<int>& indices) {
  WeylWord w;
  for (int i : indices) {
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple reflection index out of range");
    w.push_back({rs.root(rs.simple_root_index(i)), 0});
  }
  return w;
}

WeylWord inverse(const WeylWord& w) { return WeylWord(w.rbegin(), w.rend()); }

WeylWord parse_word(const RootSystem& rs, const std::string& text) {
  WeylWord w;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != 's') throw std::invalid_argument("malformed Weyl word: " + text);
    ++pos;
    if (pos < text.size() && text[pos] == '[') {
      auto close = text.find(']', pos);
      if (close == std::string::npos) throw std::invalid_argument("malformed Weyl word: " + text);
      std::string body = text.substr(pos + 1, close - pos - 1);
      auto semi = body.find(';');
      std::string coeffs = body.substr(0, semi);
      Reflection s;
      std::stringstream ss(coeffs);
      std::string item;
      while (std::getline(ss, item, ',')) s.alpha.push_back(std::stoll(item));
      if (semi != std::string::npos) s.r = std::stoll(body.substr(semi + 1));
      if (!rs.is_root(s.alpha)) throw std::invalid_argument("malformed Weyl word: not a root in " + text);
      w.push_back(s);
      pos = close + 1;
    } else {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("malformed Weyl word: " + text);
      int i = std::stoi(text.substr(start, pos - start)) - 1;
      if (i < 0 || i >= rs.rank()) throw std::invalid_argument("malformed Weyl word: index out of range in " + text);
      w.push_back({rs.root(rs.simple_root_index(i)), 0});
    }
    skip();
  }
  return w;
}

Weight reflect(const RootSystem& rs, const Reflection& s, const Weight& mu, std::uint32_t p) {
  std::int64_t k = rs.pairing(mu, s.alpha) - s.r * static_cast<std::int64_t>(p);
  Weight a = rs.root_as_weight(s.alpha);
  Weight out = mu;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= k * a[i];
  return out;
}

Weight dot_action(const RootSystem& rs, const WeylWord& w, const Weight& lambda, std::uint32_t p) {
  Weight mu = add(lambda, rs.rho());
  for (auto it = w.rbegin(); it != w.rend(); ++it) mu = reflect(rs, *it, mu, p);
  return sub(mu, rs.rho());
}

WeightDecomposition decompose_weight(const Weight& lambda, std::uint32_t p) {
  WeightDecomposition d{Weight(lambda.size()), Weight(lambda.size())};
  const auto pp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    std::int64_t r = lambda[i] % pp;
    if (r < 0) r += pp;
    d.lambda0[i] = r;
    d.lambda1[i] = (lambda[i] - r) / pp;
  }
  return d;
}

LeviDatum levi_datum(const RootSystem& rs, const std::vector<int>& I) {
  LeviDatum d;
  d.in_I.assign(static_cast<std::size_t>(rs.rank()), false);
  for (int i : I) {
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("levi_datum: simple index out of range");
    d.in_I[static_cast<std::size_t>(i)] = true;
  }
  for (int i = 0; i < rs.rank(); ++i) (d.in_I[static_cast<std::size_t>(i)] ? d.I : d.J).push_back(i);
  for (int k = 0; k < rs.N(); ++k) {
    bool levi = true;
    for (int i : d.I)
      if (rs.root(k)[static_cast<std::size_t>(i)] != 0) levi = false;
    (levi ? d.levi_roots : d.u_roots).push_back(k);
  }
  return d;
}

Shape classify_shape(RootType type, int n, const std::vector<int>& I_in) {
  std::vector<int> I = I_in;
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (I.empty()) return Shape::None;
  for (int i : I)
    if (i < 0 || i >= n) return Shape::None;
  bool contiguous = I.back() - I.front() + 1 == static_cast<int>(I.size());
  bool prefix = contiguous && I.front() == 0;
  bool suffix = contiguous && I.back() == n - 1;
  switch (type) {
    case RootType::A:
      if (prefix) return Shape::APrefix;
      if (suffix) return Shape::ASuffix;
      return Shape::None;
    case RootType::B: return suffix ? Shape::BSuffix : Shape::None;
    case RootType::C: return prefix ? Shape::CPrefix : Shape::None;
    case RootType::D:
      if (suffix && I.front() <= n - 3) return Shape::DSuffix;
      if (prefix && I.back() == n - 2) return Shape::DAllButLast;
      return Shape::None;
  }
  return Shape::None;
}

bool shape_check(RootType type, int rank, const std::vector<int>& I) {
  return classify_shape(type, rank, I) != Shape::None;
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::None: return "none";
    case Shape::APrefix: return "A-prefix";
    case Shape::ASuffix: return "A-suffix";
    case Shape::BSuffix: return "B-suffix";
    case Shape::CPrefix: return "C-prefix";
    case Shape::DSuffix: return "D-suffix";
    case Shape::DAllButLast: return "D-all-but-last";
  }
  return "none";
}

std::optional<std::string> hypothesis_violation(RootType type, int rank, std::uint32_t p) {
  if (!is_prime(p)) return std::to_string(p) + " is not prime";
  if (type != RootType::A && p == 2) return "p = 2 is not good for type " + std::string(1, type_letter(type));
  if (type == RootType::A && (rank + 1) % static_cast<int>(p) == 0)
    return "p = " + std::to_string(p) + " divides n+1 = " + std::to_string(rank + 1) + " for type A";
  return std::nullopt;
}

std::vector<Weight> alcove_weights(const RootSystem& rs, std::uint32_t p, bool regular_only) {
  std::vector<Weight> out;
  const auto n = static_cast<std::size_t>(rs.rank());
  Weight mu(n, 0);
  while (true) {
    Weight lambda = sub(mu, rs.rho());
    if (in_first_dominant_alcove(rs, lambda, p) && (!regular_only || is_p_regular(rs, lambda, p)))
      out.push_back(lambda);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++mu[k] < static_cast<std::int64_t>(p)) break;
      mu[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::string format_weight(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
  Weight c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

}  // namespace pbv
