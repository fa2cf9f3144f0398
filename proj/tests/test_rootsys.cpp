#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pbv/rootsys.hpp"

using namespace pbv;

namespace {

// Cartan matrix written down from the Dynkin diagrams, entry (i, j) = <alpha_j, alpha_i^vee>,
// and half squared lengths of the simple roots.
struct Diagram {
  std::vector<IntVec> cartan;
  IntVec half_length;
};

Diagram diagram(RootType t, int n) {
  const auto N = static_cast<std::size_t>(n);
  Diagram d{std::vector<IntVec>(N, IntVec(N, 0)), IntVec(N, 1)};
  for (std::size_t i = 0; i < N; ++i) d.cartan[i][i] = 2;
  for (std::size_t i = 0; i + 1 < N; ++i) d.cartan[i][i + 1] = d.cartan[i + 1][i] = -1;
  if (t == RootType::B) {
    d.cartan[N - 1][N - 2] = -2;
    for (std::size_t i = 0; i + 1 < N; ++i) d.half_length[i] = 2;
  }
  if (t == RootType::C) {
    d.cartan[N - 2][N - 1] = -2;
    d.half_length[N - 1] = 2;
  }
  if (t == RootType::D) {
    d.cartan[N - 1][N - 2] = d.cartan[N - 2][N - 1] = 0;
    d.cartan[N - 1][N - 3] = d.cartan[N - 3][N - 1] = -1;
  }
  return d;
}

// Positive roots as the orbit of the simple roots under simple reflections.
std::set<RootCoeffs> positive_roots_by_reflection(const Diagram& d) {
  const std::size_t n = d.cartan.size();
  std::set<RootCoeffs> all;
  std::vector<RootCoeffs> todo;
  for (std::size_t i = 0; i < n; ++i) {
    RootCoeffs a(n, 0);
    a[i] = 1;
    todo.push_back(a);
  }
  while (!todo.empty()) {
    RootCoeffs b = todo.back();
    todo.pop_back();
    if (!all.insert(b).second) continue;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t c = 0;
      for (std::size_t j = 0; j < n; ++j) c += b[j] * d.cartan[i][j];
      RootCoeffs s = b;
      s[i] -= c;
      todo.push_back(s);
    }
  }
  std::set<RootCoeffs> pos;
  for (const auto& r : all)
    if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x >= 0; })) pos.insert(r);
  return pos;
}

// <mu, beta^vee> from the diagram data: beta^vee = sum beta_i (|alpha_i|^2 / |beta|^2) alpha_i^vee.
std::int64_t coroot_pairing(const Diagram& d, const Weight& mu, const RootCoeffs& beta) {
  const std::size_t n = d.cartan.size();
  std::int64_t len = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) len += beta[i] * beta[j] * d.cartan[i][j] * d.half_length[i];
  len /= 2;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += beta[i] * d.half_length[i] * mu[i];
  return s / len;
}

std::size_t expected_N(RootType t, int n) {
  switch (t) {
    case RootType::A: return static_cast<std::size_t>(n * (n + 1) / 2);
    case RootType::B:
    case RootType::C: return static_cast<std::size_t>(n * n);
    case RootType::D: return static_cast<std::size_t>(n * (n - 1));
  }
  return 0;
}

Weight random_weight(std::mt19937_64& g, int n, std::int64_t range) {
  Weight w;
  for (int i = 0; i < n; ++i) w.push_back(oracle::uniform(g, -range, range));
  return w;
}

const std::vector<std::pair<RootType, int>> kSmallTypes = {
    {RootType::A, 1}, {RootType::A, 2}, {RootType::A, 3}, {RootType::A, 4}, {RootType::A, 5}, {RootType::A, 6},
    {RootType::B, 2}, {RootType::B, 3}, {RootType::B, 4}, {RootType::B, 5}, {RootType::B, 6},
    {RootType::C, 2}, {RootType::C, 3}, {RootType::C, 4}, {RootType::C, 5}, {RootType::C, 6},
    {RootType::D, 4}, {RootType::D, 5}, {RootType::D, 6}};

}  // namespace

TEST_CASE("positive roots agree with the reflection closure") {
  for (auto [t, n] : kSmallTypes) {
    CAPTURE(type_letter(t));
    CAPTURE(n);
    const RootSystem rs(t, n);
    const Diagram d = diagram(t, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(rs.cartan(i, j) == d.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    const auto want = positive_roots_by_reflection(d);
    CHECK(want.size() == expected_N(t, n));
    CHECK(static_cast<std::size_t>(rs.N()) == want.size());
    const std::set<RootCoeffs> got(rs.positive_roots().begin(), rs.positive_roots().end());
    CHECK(got == want);
    for (int k = 0; k < rs.N(); ++k) CHECK(rs.root_index(rs.root(k)) == k);
  }
}

TEST_CASE("small root systems") {
  const RootSystem a2(RootType::A, 2);
  CHECK(a2.N() == 3);
  CHECK(a2.is_root({1, 0}));
  CHECK(a2.is_root({0, 1}));
  CHECK(a2.is_root({1, 1}));
  CHECK(RootSystem(RootType::A, 1).N() == 1);
  const RootSystem b2(RootType::B, 2);
  CHECK(b2.N() == 4);
  CHECK(b2.squared_length({0, 1}) < b2.squared_length({1, 0}));
  CHECK(b2.is_root({1, 2}));
  const RootSystem c2(RootType::C, 2);
  CHECK(c2.squared_length({0, 1}) > c2.squared_length({1, 0}));
  CHECK(c2.is_root({2, 1}));
}

TEST_CASE("coxeter numbers") {
  CHECK(RootSystem(RootType::A, 3).coxeter_number() == 4);
  CHECK(RootSystem(RootType::B, 3).coxeter_number() == 6);
  CHECK(RootSystem(RootType::C, 3).coxeter_number() == 6);
  CHECK(RootSystem(RootType::D, 4).coxeter_number() == 6);
  for (auto [t, n] : kSmallTypes) {
    const RootSystem rs(t, n);
    CHECK(static_cast<std::size_t>(rs.coxeter_number() * n) == 2 * expected_N(t, n));
  }
}

TEST_CASE("pairing examples") {
  const RootSystem a2(RootType::A, 2);
  CHECK(a2.pairing(a2.rho(), {1, 0}) == 1);
  CHECK(a2.pairing(a2.rho(), {1, 1}) == 2);
  CHECK(a2.pairing({0, 0}, {1, 1}) == 0);
  CHECK(a2.pairing({0, 0}, {0, 1}) == 0);
  CHECK_THROWS(a2.pairing({1, 1}, {2, 1}));
}

TEST_CASE("pairings agree with the coroot formula") {
  auto g = oracle::rng(11);
  for (auto [t, n] : kSmallTypes) {
    const RootSystem rs(t, n);
    const Diagram d = diagram(t, n);
    for (int k = 0; k < 20; ++k) {
      const Weight mu = random_weight(g, n, 9);
      for (const auto& beta : rs.positive_roots()) CHECK(rs.pairing(mu, beta) == coroot_pairing(d, mu, beta));
    }
  }
}

TEST_CASE("first dominant alcove and p-regularity examples") {
  const RootSystem a2(RootType::A, 2);
  CHECK(in_first_dominant_alcove(a2, {0, 0}, 5));
  CHECK_FALSE(in_first_dominant_alcove(a2, {4, 0}, 5));
  for (auto [t, n] : kSmallTypes) {
    const RootSystem rs(t, n);
    const Weight minus_rho = sub(Weight(static_cast<std::size_t>(n), 0), rs.rho());
    CHECK(in_first_dominant_alcove(rs, minus_rho, 5));
    CHECK_FALSE(is_p_regular(rs, minus_rho, 5));
  }
  CHECK(is_p_regular(a2, {0, 0}, 5));
  CHECK_FALSE(is_p_regular(a2, {1, 2}, 5));
}

TEST_CASE("alcove weights match a direct count") {
  const RootSystem a2(RootType::A, 2);
  const auto ws = alcove_weights(a2, 5, true);
  CHECK(ws.size() == 6);
  const std::set<Weight> want{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 1}};
  CHECK(std::set<Weight>(ws.begin(), ws.end()) == want);
  CHECK(alcove_weights(RootSystem(RootType::A, 3), 3, true).empty());
  CHECK(alcove_weights(RootSystem(RootType::C, 3), 3, true).empty());
  CHECK(alcove_weights(RootSystem(RootType::D, 4), 3, true).empty());
  const auto b2 = alcove_weights(RootSystem(RootType::B, 2), 5, true);
  CHECK(std::set<Weight>(b2.begin(), b2.end()) == std::set<Weight>{{0, 0}, {0, 1}});
}

TEST_CASE("regular alcove weights have pairings strictly between 0 and p") {
  for (auto [t, n] : kSmallTypes) {
    if (n > 4) continue;
    const RootSystem rs(t, n);
    for (std::uint32_t p : {3u, 5u, 7u}) {
      for (const auto& w : alcove_weights(rs, p, false)) {
        if (!is_p_regular(rs, w, p)) continue;
        for (const auto& beta : rs.positive_roots()) {
          const auto a = rs.pairing(add(w, rs.rho()), beta);
          CHECK(a > 0);
          CHECK(a < static_cast<std::int64_t>(p));
        }
      }
    }
  }
}

TEST_CASE("dot action examples") {
  const RootSystem a2(RootType::A, 2);
  CHECK(dot_action(a2, {}, {3, -1}, 5) == Weight{3, -1});
  CHECK(dot_action(a2, simple_word(a2, {0}), {0, 0}, 5) == Weight{-2, 1});
  for (std::int64_t r1 = 1; r1 < 5; ++r1)
    for (std::int64_t r2 = 1; r1 + r2 <= 5; ++r2) {
      const Weight l0 = sub({r1, r2}, a2.rho());
      const auto sigma = simple_word(a2, {0, 1});
      const Weight l1 = dot_action(a2, sigma, l0, 5);
      CHECK(add(l1, a2.rho()) == IntVec{-(r1 + r2), r1});
      CHECK(add(dot_action(a2, sigma, l1, 5), a2.rho()) == IntVec{r2, -(r1 + r2)});
    }
  CHECK(parse_word(a2, "s1 s2").size() == 2);
  const auto aff = parse_word(a2, "s[1,1;1]");
  REQUIRE(aff.size() == 1);
  CHECK(aff[0].alpha == RootCoeffs{1, 1});
  CHECK(aff[0].r == 1);
  // s_{alpha, 1} fixes the hyperplane <mu + rho, alpha^vee> = p
  CHECK(dot_action(a2, aff, sub({2, 3}, a2.rho()), 5) == sub({2, 3}, a2.rho()));
}

TEST_CASE("dot action by w then its inverse is the identity") {
  auto g = oracle::rng(12);
  for (auto [t, n] : kSmallTypes) {
    const RootSystem rs(t, n);
    for (int trial = 0; trial < 30; ++trial) {
      WeylWord w;
      const auto len = oracle::uniform(g, 0, 8);
      for (std::int64_t k = 0; k < len; ++k) {
        const auto idx = static_cast<int>(oracle::uniform(g, 0, rs.N() - 1));
        w.push_back({rs.root(idx), oracle::uniform(g, -2, 2)});
      }
      const Weight l = random_weight(g, n, 12);
      for (std::uint32_t p : {3u, 5u, 7u}) CHECK(dot_action(rs, w, dot_action(rs, inverse(w), l, p), p) == l);
    }
  }
}

TEST_CASE("decompose weight") {
  CHECK(decompose_weight({0, 0}, 5).lambda0 == Weight{0, 0});
  CHECK(decompose_weight({0, 0}, 5).lambda1 == Weight{0, 0});
  CHECK(decompose_weight({5, 0}, 5).lambda0 == Weight{0, 0});
  CHECK(decompose_weight({5, 0}, 5).lambda1 == Weight{1, 0});
  CHECK(decompose_weight({7, 3}, 5).lambda0 == Weight{2, 3});
  CHECK(decompose_weight({7, 3}, 5).lambda1 == Weight{1, 0});
  auto g = oracle::rng(13);
  for (int k = 0; k < 1000; ++k) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[static_cast<std::size_t>(k % 3)];
    const Weight l = random_weight(g, 4, 40);
    const auto d = decompose_weight(l, p);
    Weight back;
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(d.lambda0[i] >= 0);
      CHECK(d.lambda0[i] < static_cast<std::int64_t>(p));
      back.push_back(d.lambda0[i] + static_cast<std::int64_t>(p) * d.lambda1[i]);
    }
    CHECK(back == l);
  }
}

TEST_CASE("levi data") {
  const RootSystem a2(RootType::A, 2);
  const auto l = levi_datum(a2, {0});
  REQUIRE(l.levi_roots.size() == 1);
  CHECK(a2.root(l.levi_roots[0]) == RootCoeffs{0, 1});
  std::set<RootCoeffs> u;
  for (int k : l.u_roots) u.insert(a2.root(k));
  CHECK(u == std::set<RootCoeffs>{{1, 0}, {1, 1}});
  CHECK(levi_datum(a2, {}).u_roots.empty());
  CHECK(levi_datum(a2, {}).levi_roots.size() == 3);
  CHECK(levi_datum(a2, {0, 1}).levi_roots.empty());
  const RootSystem d4(RootType::D, 4);
  const auto ld = levi_datum(d4, {1, 2, 3});
  CHECK(ld.J == std::vector<int>{0});
  CHECK(ld.u_roots.size() == 11);
}

TEST_CASE("admissible shapes") {
  CHECK(shape_check(RootType::A, 4, {0, 1}));
  CHECK(shape_check(RootType::B, 3, {1, 2}));
  CHECK_FALSE(shape_check(RootType::A, 4, {1, 2}));
  CHECK(shape_check(RootType::A, 4, {2, 3}));
  CHECK(shape_check(RootType::C, 3, {0}));
  CHECK_FALSE(shape_check(RootType::C, 3, {2}));
  CHECK_FALSE(shape_check(RootType::B, 3, {0}));
  CHECK(shape_check(RootType::D, 4, {1, 2, 3}));
  CHECK(classify_shape(RootType::D, 5, {0, 1, 2, 3}) == Shape::DAllButLast);
  CHECK_FALSE(shape_check(RootType::A, 3, {}));
}

TEST_CASE("standing hypotheses") {
  CHECK_FALSE(hypothesis_violation(RootType::A, 2, 5));
  CHECK(hypothesis_violation(RootType::A, 2, 3));
  CHECK(hypothesis_violation(RootType::A, 2, 4));
  CHECK(hypothesis_violation(RootType::B, 2, 2));
  CHECK_FALSE(hypothesis_violation(RootType::D, 4, 3));
  CHECK_THROWS(RootSystem(RootType::D, 3));
}
