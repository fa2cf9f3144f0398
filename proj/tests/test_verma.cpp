#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pbv/verma.hpp"

using namespace pbv;

namespace {

std::shared_ptr<const ChevalleyAlgebra> algebra(RootType t, int n, SignConvention s = SignConvention::Standard) {
  return std::make_shared<const ChevalleyAlgebra>(build_algebra(build_root_system(t, n), s));
}

ModulePtr parabolic(RootType t, int n, std::uint32_t p, const std::vector<int>& I, const Weight& lambda,
                    std::vector<std::int64_t> values = {}, SignConvention s = SignConvention::Standard,
                    bool fallback = false) {
  auto alg = algebra(t, n, s);
  PrimeField f(p);
  BuildOptions opts;
  opts.fallback_order = fallback;
  return build_parabolic_baby_verma(alg, make_pchar(*alg, I, values, f), lambda, f, opts);
}

ModulePtr baby(RootType t, int n, std::uint32_t p, const std::vector<int>& I, const Weight& lambda) {
  auto alg = algebra(t, n);
  PrimeField f(p);
  return build_baby_verma(alg, make_pchar(*alg, I, {}, f), lambda, f);
}

bool contains(const Subspace& s, const SparseVec& v, const PrimeField& f) {
  EchelonBasis e(s.ambient, f);
  for (const auto& b : s.basis) e.insert(b);
  return e.contains(v);
}

bool is_maximal(const RepModule& m, const SparseVec& v) {
  for (int g : m.raising())
    if (!m.op(g).apply(v, m.field()).empty()) return false;
  return true;
}

std::vector<Weight> transversal(int n, std::uint32_t p) {
  std::vector<Weight> out;
  Weight w(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(w);
    std::size_t k = w.size();
    while (k > 0 && ++w[k - 1] == static_cast<std::int64_t>(p)) w[--k] = 0;
    if (k == 0) return out;
  }
}

std::vector<std::pair<std::size_t, std::size_t>> profile_shape(const IrreducibilityReport& r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : r.profile) out.emplace_back(c.size, c.kernel_dim);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sl_2 baby Verma modules agree with the hand-written oracle") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::int64_t l = 0; l < static_cast<std::int64_t>(p); ++l) {
      CAPTURE(p);
      CAPTURE(l);
      const oracle::Sl2 o{p, l};
      CHECK(o.simple() == (l + 1 == static_cast<std::int64_t>(p)));
      auto m = baby(RootType::A, 1, p, {}, {l});
      REQUIRE(m->dim() == p);
      const auto rep = is_irreducible(*m);
      CHECK(rep.irreducible == o.simple());
      CHECK(radical(m).dim() == o.radical_dim());
      std::vector<std::int64_t> eig;
      for (std::size_t j = 0; j < m->dim(); ++j) eig.push_back(m->op(m->alg().h(0)).column(j).at(static_cast<std::uint32_t>(j)));
      const auto h_eig = o.h_eigenvalues();
      const std::multiset<std::int64_t> want(h_eig.begin(), h_eig.end());
      CHECK(std::multiset<std::int64_t>(eig.begin(), eig.end()) == want);
      CHECK(oracle::brute_force(*m).irreducible == o.simple());
    }
}

TEST_CASE("generated submodules") {
  auto m = baby(RootType::A, 1, 5, {}, {1});
  const auto y = m->alg().y(0);
  const SparseVec top = SparseVec::unit(5, 0);
  const SparseVec y2 = m->op(y).apply(m->op(y).column(0), m->field());
  const auto g = generates(*m, y2);
  CHECK_FALSE(g.generates);
  CHECK(g.dim == 3);
  CHECK(generates_maximal(*m, y2).dim == 3);
  const auto z = generates(*m, SparseVec(5));
  CHECK_FALSE(z.generates);
  CHECK(z.dim == 0);
  const auto t = generates(*m, top);
  CHECK(t.generates);
  CHECK(t.dim == 5);
  auto a2 = parabolic(RootType::A, 2, 5, {0}, {0, 0});
  CHECK(generates(*a2, SparseVec::unit(a2->dim(), 0)).dim == a2->dim());
}

TEST_CASE("maximal vectors") {
  auto m = baby(RootType::A, 1, 5, {}, {1});
  const auto rep = maximal_vectors(*m);
  CHECK(rep.total() == 2);
  std::set<RootCoeffs> depths;
  for (const auto& basis : rep.bases)
    for (const auto& v : basis) {
      CHECK(is_maximal(*m, v));
      for (const auto& e : v.entries()) depths.insert(m->depth(e.index));
    }
  CHECK(depths == std::set<RootCoeffs>{{0}, {2}});

  auto a2 = parabolic(RootType::A, 2, 5, {0}, {0, 0});
  const auto r2 = maximal_vectors(*a2);
  REQUIRE(!r2.profile.empty());
  for (const auto& c : r2.profile) CHECK(c.top_grade);
  CHECK(is_maximal(*a2, SparseVec::unit(a2->dim(), 0)));
}

TEST_CASE("irreducibility examples") {
  auto a2 = parabolic(RootType::A, 2, 5, {0}, {0, 0});
  const auto r = is_irreducible(*a2);
  CHECK(r.irreducible);
  CHECK(r.dim == 25);
  CHECK_FALSE(r.witness);

  auto a1 = baby(RootType::A, 1, 5, {}, {1});
  const auto r1 = is_irreducible(*a1);
  CHECK_FALSE(r1.irreducible);
  REQUIRE(r1.witness);
  CHECK(r1.witness->generated_dim == 3);

  for (const auto& l : transversal(2, 5)) {
    auto m = parabolic(RootType::A, 2, 5, {0, 1}, l);
    CHECK(m->dim() == 125);
    CHECK(is_irreducible(*m).irreducible);
  }
}

TEST_CASE("radicals and quotients") {
  auto a2 = parabolic(RootType::A, 2, 5, {0}, {0, 0});
  CHECK(radical(a2).dim() == 0);

  auto a1 = baby(RootType::A, 1, 5, {}, {1});
  const auto rad = radical(a1);
  CHECK(rad.dim() == 3);
  auto head = quotient(a1, rad);
  REQUIRE(head->dim() == 2);
  std::multiset<Scalar> eig;
  for (std::size_t j = 0; j < 2; ++j) eig.insert(head->op(head->alg().h(0)).column(j).at(static_cast<std::uint32_t>(j)));
  CHECK(eig == std::multiset<Scalar>{1, 4});
  CHECK(representation_defects(*head) == 0);
  CHECK(is_irreducible(*head).irreducible);

  auto same = quotient(a1, Subspace{a1->dim(), {}});
  CHECK(same->dim() == a1->dim());
  for (int g : a1->active_ids()) CHECK(same->op(g).columns() == a1->op(g).columns());

  Subspace whole{a1->dim(), {}};
  for (std::uint32_t k = 0; k < a1->dim(); ++k) whole.basis.push_back(SparseVec::unit(a1->dim(), k));
  CHECK(quotient(a1, whole)->dim() == 0);

  Subspace top{a1->dim(), {SparseVec::unit(a1->dim(), 0)}};
  CHECK_THROWS_AS(quotient(a1, top), NotStable);

  auto z = baby(RootType::A, 2, 5, {}, {0, 0});
  const auto rz = radical(z);
  CHECK(rz.dim() == 124);
  CHECK(z->dim() - rz.dim() == 1);
}

TEST_CASE("Levi simple modules") {
  auto a2 = algebra(RootType::A, 2);
  PrimeField f(5);
  const auto& rs = a2->roots();
  CHECK(build_levi_simple(a2, levi_datum(rs, {0, 1}), {3, 1}, f)->dim() == 1);
  for (std::int64_t l = 0; l < 5; ++l) CHECK(build_levi_simple(a2, levi_datum(rs, {0}), {2, l}, f)->dim() == static_cast<std::size_t>(l + 1));
  CHECK(build_levi_simple(a2, levi_datum(rs, {}), {0, 0}, f)->dim() == 1);
  auto b3 = algebra(RootType::B, 3);
  CHECK(build_levi_simple(b3, levi_datum(b3->roots(), {}), {0, 0, 0}, PrimeField(3))->dim() == 1);
  auto full = parabolic(RootType::A, 2, 5, {}, {1, 1});
  CHECK(full->dim() == 8);
  CHECK(is_irreducible(*full).irreducible);
  auto reg = parabolic(RootType::A, 2, 3, {0, 1}, {1, 1});
  CHECK(reg->dim() == 27);
}

TEST_CASE("baby Verma module surjects onto the parabolic one") {
  for (auto [t, n, p, I, l] : std::vector<std::tuple<RootType, int, std::uint32_t, std::vector<int>, Weight>>{
           {RootType::A, 2, 5, {0}, {0, 1}},
           {RootType::A, 2, 5, {}, {2, 1}},
           {RootType::B, 2, 3, {1}, {1, 0}},
           {RootType::A, 3, 3, {0, 1}, {0, 0, 1}},
           {RootType::C, 2, 3, {0}, {0, 2}}}) {
    auto alg = algebra(t, n);
    PrimeField f(p);
    std::string detail;
    CHECK_MESSAGE(check_surjection(alg, make_pchar(*alg, I, {}, f), l, f, {}, &detail), detail);
  }
}

TEST_CASE("resource caps") {
  auto alg = algebra(RootType::B, 2);
  PrimeField f(5);
  BuildOptions opts;
  opts.cap = 100;
  CHECK_THROWS_AS(build_parabolic_baby_verma(alg, make_pchar(*alg, {1}, {}, f), {0, 0}, f, opts), CapExceeded);
  auto z = baby(RootType::A, 2, 5, {}, {0, 0});
  CHECK_NOTHROW(is_irreducible(*z, 100000));
}

TEST_CASE("representation checks detect a corrupted action") {
  auto m = parabolic(RootType::A, 2, 5, {0}, {0, 1});
  CHECK(representation_defects(*m) == 0);
  const auto& f = m->field();
  std::vector<bool> active;
  for (int g = 0; g < m->alg().dim(); ++g) active.push_back(m->acts(g));
  std::vector<RootCoeffs> depth;
  for (std::size_t j = 0; j < m->dim(); ++j) depth.push_back(m->depth(j));
  const int bad = m->alg().x(0);
  RepModule broken(m->alg_ptr(), f, m->dim(), active, m->lambda(), m->grade_mask(), depth, [&](int g) {
    if (g != bad) return m->op(g);
    std::vector<SparseVec> cols;
    for (const auto& c : m->op(g).columns()) cols.push_back(c.scaled(2, f));
    return LinearOp(m->dim(), cols);
  });
  CHECK(representation_defects(broken) > 0);
  CHECK(representation_defects(broken, 50, 7) > 0);
  CHECK(frobenius_defects(*m, make_pchar(m->alg(), {0}, {}, f)) == 0);
  CHECK(frobenius_defects(*m, make_pchar(m->alg(), {0}, {2}, f)) > 0);
}

TEST_CASE("structural properties across sweeps") {
  struct Sweep {
    RootType t;
    int n;
    std::uint32_t p;
    std::vector<int> I;
  };
  for (const auto& s : std::vector<Sweep>{{RootType::A, 1, 5, {}},
                                          {RootType::A, 2, 5, {0}},
                                          {RootType::A, 2, 5, {1}},
                                          {RootType::A, 2, 3, {0}},
                                          {RootType::B, 2, 3, {1}},
                                          {RootType::C, 2, 3, {0}},
                                          {RootType::A, 2, 3, {}}}) {
    for (const auto& l : transversal(s.n, s.p)) {
      CAPTURE(type_letter(s.t));
      CAPTURE(s.p);
      CAPTURE(format_weight(l));
      auto alg = algebra(s.t, s.n);
      PrimeField f(s.p);
      const auto levi = levi_datum(alg->roots(), s.I);
      auto m = build_parabolic_baby_verma(alg, make_pchar(*alg, s.I, {}, f), l, f);
      auto L = build_levi_simple(alg, levi, l, f);
      std::size_t expected = L->dim();
      for (std::size_t k = 0; k < levi.u_roots.size(); ++k) expected *= s.p;
      CHECK(m->dim() == expected);

      const auto rep = is_irreducible(*m);
      const auto rad = radical(m);
      CHECK(rep.irreducible == (rad.dim() == 0));
      if (!rep.irreducible) {
        REQUIRE(rep.witness);
        CHECK(is_maximal(*m, rep.witness->vector));
        CHECK(contains(rad, rep.witness->vector, f));
      }
      auto head = quotient(m, rad);
      CHECK(is_irreducible(*head).irreducible);

      const auto mv = maximal_vectors(*m);
      for (std::size_t c = 0; c < mv.profile.size(); ++c) {
        if (mv.profile[c].top_grade) continue;
        for (const auto& v : mv.bases[c])
          for (const auto& e : v.entries())
            for (auto k : m->depth(e.index)) CHECK(k >= 0);
      }
    }
  }
}

TEST_CASE("verdicts agree with brute-force cyclic submodule enumeration at p = 3") {
  std::size_t modules = 0;
  auto run = [&](const ModulePtr& m) {
    CAPTURE(m->description);
    const auto bf = oracle::brute_force(*m);
    CHECK(bf.irreducible == is_irreducible(*m).irreducible);
    if (!bf.irreducible) CHECK(bf.smallest <= radical(m).dim());
    ++modules;
  };
  for (const auto& l : transversal(1, 3)) {
    run(baby(RootType::A, 1, 3, {}, l));
    run(baby(RootType::A, 1, 3, {0}, l));
  }
  for (const auto& l : transversal(2, 3)) {
    run(baby(RootType::A, 2, 3, {}, l));
    run(parabolic(RootType::A, 2, 3, {0}, l));
    run(parabolic(RootType::A, 2, 3, {1}, l));
    run(parabolic(RootType::A, 2, 3, {0, 1}, l));
  }
  CHECK(modules == 42);
}

TEST_CASE("verdict stability under signs, chi values and monomial order") {
  struct Sweep {
    RootType t;
    int n;
    std::uint32_t p;
    std::vector<int> I;
  };
  for (const auto& s : std::vector<Sweep>{{RootType::A, 2, 5, {0}}, {RootType::A, 2, 5, {1}}, {RootType::A, 2, 5, {0, 1}},
                                          {RootType::B, 2, 5, {1}}, {RootType::B, 2, 3, {1}}}) {
    for (const auto& l : transversal(s.n, s.p)) {
      CAPTURE(format_weight(l));
      const auto base = is_irreducible(*parabolic(s.t, s.n, s.p, s.I, l));
      std::vector<std::int64_t> other;
      for (std::size_t k = 0; k < s.I.size(); ++k) other.push_back(static_cast<std::int64_t>(s.p - 1 - k));
      for (const auto& rep : {is_irreducible(*parabolic(s.t, s.n, s.p, s.I, l, {}, SignConvention::Flipped)),
                              is_irreducible(*parabolic(s.t, s.n, s.p, s.I, l, other)),
                              is_irreducible(*parabolic(s.t, s.n, s.p, s.I, l, {}, SignConvention::Standard, true))}) {
        CHECK(rep.irreducible == base.irreducible);
        CHECK(profile_shape(rep) == profile_shape(base));
      }
    }
  }
}
