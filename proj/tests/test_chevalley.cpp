#include <cstdlib>
#include <map>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pbv/chevalley.hpp"

using namespace pbv;

namespace {

using Dense = std::map<int, std::int64_t>;

Dense bracket_combination(const ChevalleyAlgebra& g, const Dense& u, int c) {
  Dense out;
  for (const auto& [a, ca] : u)
    for (const auto& [z, cz] : g.bracket(a, c)) out[z] += ca * cz;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Dense single(const ChevalleyAlgebra& g, int a, int b) {
  Dense out;
  for (const auto& [z, c] : g.bracket(a, b)) out[z] += c;
  return out;
}

void add_into(Dense& acc, const Dense& d) {
  for (const auto& [k, v] : d) acc[k] += v;
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

const std::vector<std::pair<RootType, int>> kTypes = {{RootType::A, 1}, {RootType::A, 2}, {RootType::A, 3},
                                                      {RootType::B, 2}, {RootType::B, 3}, {RootType::C, 2},
                                                      {RootType::C, 3}, {RootType::D, 4}};

}  // namespace

TEST_CASE("Jacobi identity over the integers") {
  for (auto signs : {SignConvention::Standard, SignConvention::Flipped})
    for (auto [t, n] : kTypes) {
      CAPTURE(type_letter(t));
      CAPTURE(n);
      const auto g = build_algebra(build_root_system(t, n), signs);
      bool ok = true;
      for (int a = 0; a < g.dim() && ok; ++a)
        for (int b = 0; b < g.dim() && ok; ++b)
          for (int c = b + 1; c < g.dim() && ok; ++c) {
            Dense sum;
            add_into(sum, bracket_combination(g, single(g, a, b), c));
            add_into(sum, bracket_combination(g, single(g, b, c), a));
            add_into(sum, bracket_combination(g, single(g, c, a), b));
            ok = sum.empty();
          }
      CHECK(ok);
    }
}

TEST_CASE("antisymmetry and grading") {
  for (auto [t, n] : kTypes) {
    const auto g = build_algebra(build_root_system(t, n));
    const auto& rs = g.roots();
    for (int a = 0; a < g.dim(); ++a)
      for (int b = 0; b < g.dim(); ++b) {
        Dense ab = single(g, a, b), ba = single(g, b, a);
        for (auto& [k, v] : ba) v = -v;
        CHECK(ab == ba);
        const RootCoeffs deg = add(g.degree(a), g.degree(b));
        const bool zero = std::all_of(deg.begin(), deg.end(), [](auto x) { return x == 0; });
        const bool root = zero || rs.is_root(deg) || rs.is_root(sub(RootCoeffs(deg.size(), 0), deg));
        if (!root) CHECK(ab.empty());
        for (const auto& [z, c] : ab) CHECK(g.degree(z) == deg);
      }
  }
}

TEST_CASE("torus brackets") {
  for (auto [t, n] : kTypes) {
    const auto g = build_algebra(build_root_system(t, n));
    const auto& rs = g.roots();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) CHECK(g.bracket(g.h(i), g.h(j)).empty());
      for (int k = 0; k < g.N(); ++k) {
        const auto c = rs.root_pairing(rs.root(k), i);
        CHECK(single(g, g.h(i), g.x(k)) == (c ? Dense{{g.x(k), c}} : Dense{}));
        CHECK(single(g, g.h(i), g.y(k)) == (c ? Dense{{g.y(k), -c}} : Dense{}));
      }
    }
  }
}

TEST_CASE("x_alpha and y_alpha bracket to the coroot") {
  auto rng = oracle::rng(21);
  for (auto [t, n] : kTypes) {
    const auto g = build_algebra(build_root_system(t, n));
    const auto& rs = g.roots();
    for (int k = 0; k < g.N(); ++k) {
      const Dense h = single(g, g.x(k), g.y(k));
      for (const auto& [z, c] : h) CHECK(g.element(z).kind == BasisKind::H);
      for (int trial = 0; trial < 100; ++trial) {
        Weight l;
        for (int i = 0; i < n; ++i) l.push_back(oracle::uniform(rng, -20, 20));
        std::int64_t s = 0;
        for (const auto& [z, c] : h) s += c * l[static_cast<std::size_t>(g.element(z).index)];
        CHECK(s == rs.pairing(l, rs.root(k)));
      }
    }
  }
}

TEST_CASE("structure constants are plus or minus (q + 1)") {
  for (auto signs : {SignConvention::Standard, SignConvention::Flipped})
    for (auto [t, n] : kTypes) {
      const auto g = build_algebra(build_root_system(t, n), signs);
      const auto& rs = g.roots();
      for (int a = 0; a < g.N(); ++a)
        for (int b = 0; b < g.N(); ++b) {
          const RootCoeffs s = add(rs.root(a), rs.root(b));
          if (!rs.is_root(s)) {
            CHECK(g.structure_constant(a, b) == 0);
            continue;
          }
          int q = 0;
          RootCoeffs down = rs.root(b);
          while (true) {
            down = sub(down, rs.root(a));
            const bool neg = std::all_of(down.begin(), down.end(), [](auto x) { return x <= 0; });
            if (!rs.is_root(down) && !(neg && rs.is_root(sub(RootCoeffs(down.size(), 0), down)))) break;
            ++q;
          }
          CHECK(std::llabs(g.structure_constant(a, b)) == q + 1);
          CHECK(single(g, g.x(a), g.x(b)) == Dense{{g.x(rs.root_index(s)), g.structure_constant(a, b)}});
        }
    }
}

TEST_CASE("small structure constants") {
  const auto a2 = build_algebra(build_root_system(RootType::A, 2));
  const auto& r = a2.roots();
  const int a1 = r.root_index({1, 0}), a2r = r.root_index({0, 1}), a12 = r.root_index({1, 1});
  CHECK(std::llabs(a2.structure_constant(a1, a2r)) == 1);
  CHECK(a2.bracket(a2.x(a1), a2.x(a12)).empty());
  const auto b2 = build_algebra(build_root_system(RootType::B, 2));
  const auto& rb = b2.roots();
  CHECK(std::llabs(b2.structure_constant(rb.root_index({0, 1}), rb.root_index({1, 1}))) == 2);
}

TEST_CASE("sign conventions differ only in signs") {
  for (auto [t, n] : kTypes) {
    const auto s = build_algebra(build_root_system(t, n), SignConvention::Standard);
    const auto f = build_algebra(build_root_system(t, n), SignConvention::Flipped);
    bool differs = false;
    for (int a = 0; a < s.N(); ++a)
      for (int b = 0; b < s.N(); ++b) {
        CHECK(std::llabs(s.structure_constant(a, b)) == std::llabs(f.structure_constant(a, b)));
        differs = differs || s.structure_constant(a, b) != f.structure_constant(a, b);
      }
    if (n >= 2) CHECK(differs);
  }
}

TEST_CASE("restricted p-map") {
  const auto a2 = build_algebra(build_root_system(RootType::A, 2));
  CHECK(a2.p_power(a2.y(0)).empty());
  CHECK(a2.p_power(a2.h(0)) == IntCombination{{a2.h(0), 1}});
  CHECK(a2.p_power(a2.x(a2.roots().highest_root())).empty());
  for (std::uint32_t p : {3u, 5u, 7u})
    for (auto [t, n] : kTypes) {
      const auto g = build_algebra(build_root_system(t, n));
      PrimeField f(p);
      for (int b = 0; b < g.dim(); ++b) {
        const auto lhs = op_power(adjoint_op(g, b, f), p, f);
        const auto dim = static_cast<std::size_t>(g.dim());
        Accumulator acc(dim, f);
        std::vector<SparseVec> cols;
        for (std::size_t j = 0; j < dim; ++j) {
          for (const auto& [z, c] : g.p_power(b)) acc.add_scaled(adjoint_op(g, z, f).column(j), f.reduce(c));
          cols.push_back(acc.take());
        }
        const LinearOp rhs(dim, cols);
        CHECK(lhs.columns() == rhs.columns());
      }
    }
}

TEST_CASE("bracket export for sl_2") {
  const auto g = build_algebra(build_root_system(RootType::A, 1));
  const auto text = g.export_brackets();
  std::istringstream in(text);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 3);
}

TEST_CASE("p-characters of standard Levi form") {
  const auto g = build_algebra(build_root_system(RootType::A, 2));
  PrimeField f(5);
  CHECK(make_pchar(g, {}, {}, f).is_zero());
  const auto reg = make_pchar(g, {0, 1}, {}, f);
  CHECK(reg.value_on_simple(0) == 1);
  CHECK(reg.value_on_simple(1) == 1);
  const auto sub = make_pchar(g, {0}, {1}, f);
  CHECK(sub.value_on_simple(0) == 1);
  CHECK(sub.value_on_simple(1) == 0);
  CHECK(sub.wrap_scalar(g.roots(), g.roots().root_index({1, 0})) == 1);
  CHECK(sub.wrap_scalar(g.roots(), g.roots().root_index({1, 1})) == 0);
  CHECK(make_pchar(g, {0}, {2}, f).wrap_scalar(g.roots(), 0) == f.pow(2, 5));
  CHECK_THROWS(make_pchar(g, {0}, {5}, f));
  CHECK_THROWS(make_pchar(g, {0, 0}, {}, f));
}
