#include "pbv/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pbv {

namespace {

std::shared_ptr<const ChevalleyAlgebra> algebra_for(RootType type, int rank, SignConvention signs) {
  static std::mutex mutex;
  static std::map<std::tuple<RootType, int, SignConvention>, std::shared_ptr<const ChevalleyAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{type, rank, signs}];
  if (!slot) slot = std::make_shared<const ChevalleyAlgebra>(build_algebra(build_root_system(type, rank), signs));
  return slot;
}

std::string format_I(const std::vector<int>& I) {
  std::string s = "{";
  for (std::size_t k = 0; k < I.size(); ++k) s += (k ? "," : "") + std::to_string(I[k] + 1);
  return s + "}";
}

std::size_t power(std::uint32_t p, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= p;
  return r;
}

std::vector<int> range_I(int from, int to) {
  std::vector<int> I;
  for (int i = from; i < to; ++i) I.push_back(i);
  return I;
}

Weight apply_word(const RootSystem& rs, const std::vector<int>& simple, const Weight& lambda, std::uint32_t p) {
  return dot_action(rs, simple_word(rs, simple), lambda, p);
}

void require_block_input(const RootSystem& rs, const BlockSpec& spec, int min_rank) {
  if (spec.rank < min_rank) throw std::invalid_argument("block campaigns need rank at least " + std::to_string(min_rank));
  if (auto why = hypothesis_violation(rs.type(), spec.rank, spec.p)) throw std::invalid_argument(*why);
  if (spec.r.size() != static_cast<std::size_t>(spec.rank)) throw std::invalid_argument("lambda + rho has the wrong rank");
  const Weight lambda = sub(spec.r, rs.rho());
  if (!in_first_dominant_alcove(rs, lambda, spec.p))
    throw std::invalid_argument("base weight " + format_weight(spec.r) + " - rho is not in C_0");
  if (!is_p_regular(rs, lambda, spec.p))
    throw std::invalid_argument("base weight " + format_weight(spec.r) + " - rho is not p-regular");
}

CampaignRow block_row(RootType type, int rank, std::uint32_t p, std::vector<int> I, const Weight& lambda,
                      std::string label, std::size_t expected_dim) {
  CampaignRow row;
  row.label = std::move(label);
  row.source = "block";
  row.type = type;
  row.rank = rank;
  row.p = p;
  row.I = std::move(I);
  row.lambda = decompose_weight(lambda, p).lambda0;
  row.expect = Expectation::Irreducible;
  row.expected_dim = expected_dim;
  return row;
}

}  // namespace

std::string policy_name(WeightPolicy p) {
  switch (p) {
    case WeightPolicy::Alcove: return "alcove";
    case WeightPolicy::Representatives: return "representatives";
    case WeightPolicy::Transversal: return "transversal";
    case WeightPolicy::Explicit: return "explicit";
  }
  return "explicit";
}

WeightPolicy parse_policy(const std::string& s) {
  if (s == "alcove") return WeightPolicy::Alcove;
  if (s == "representatives") return WeightPolicy::Representatives;
  if (s == "transversal") return WeightPolicy::Transversal;
  if (s == "explicit") return WeightPolicy::Explicit;
  throw std::invalid_argument("unknown weight policy '" + s + "'");
}

std::string expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Irreducible: return "irreducible";
    case Expectation::Reducible: return "reducible";
    case Expectation::None: return "none";
  }
  return "none";
}

bool CampaignRow::passed() const {
  if (cap_exceeded) return true;
  if (!error.empty() || !built) return false;
  if (expected_dim && dim != *expected_dim) return false;
  if (expect == Expectation::Irreducible) return irreducible;
  if (expect == Expectation::Reducible) return !irreducible;
  return true;
}

std::string CampaignRow::verdict() const {
  if (cap_exceeded) return "skipped";
  if (!error.empty() || !built) return "error";
  return irreducible ? "irreducible" : "reducible";
}

bool CampaignReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CampaignRow& r) { return r.passed(); }) &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::size_t CampaignReport::skipped() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CampaignRow& r) { return r.skipped(); }));
}

std::vector<const CampaignRow*> CampaignReport::failures() const {
  std::vector<const CampaignRow*> out;
  for (const auto& r : rows)
    if (!r.passed()) out.push_back(&r);
  return out;
}

void run_rows(std::vector<CampaignRow>& rows, const BuildOptions& build, unsigned workers) {
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= rows.size()) return;
      CampaignRow& row = rows[k];
      const auto t0 = std::chrono::steady_clock::now();
      try {
        auto alg = algebra_for(row.type, row.rank, row.signs);
        PrimeField f(row.p);
        PChar chi = make_pchar(*alg, row.I, row.chi_values, f);
        BuildOptions opts = build;
        opts.fallback_order = opts.fallback_order || row.fallback_order;
        ModulePtr m = row.baby ? build_baby_verma(alg, chi, row.lambda, f, opts)
                               : build_parabolic_baby_verma(alg, chi, row.lambda, f, opts);
        auto rep = is_irreducible(*m, opts.line_cap);
        row.built = true;
        row.dim = rep.dim;
        row.irreducible = rep.irreducible;
        row.witness_dim = rep.witness ? rep.witness->generated_dim : 0;
        row.lines_checked = rep.lines_checked;
        row.profile = std::move(rep.profile);
      } catch (const CapExceeded& e) {
        row.cap_exceeded = true;
        row.error = e.what();
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
  if (n <= 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

std::vector<Weight> representative_weights(const RootSystem& rs, std::uint32_t p, const std::vector<int>& I) {
  const auto n = static_cast<std::size_t>(rs.rank());
  std::vector<Weight> out;
  IntVec mu(n, 1);
  std::vector<std::size_t> free;
  for (int i : I) free.push_back(static_cast<std::size_t>(i));
  std::sort(free.begin(), free.end());
  while (true) {
    out.push_back(sub(mu, rs.rho()));
    std::size_t k = free.size();
    while (k > 0) {
      --k;
      if (++mu[free[k]] < static_cast<std::int64_t>(p)) break;
      mu[free[k]] = 1;
      if (k == 0) return out;
    }
    if (free.empty()) return out;
  }
}

std::optional<std::size_t> levi_weyl_dimension(const RootSystem& rs, const LeviDatum& levi, const Weight& lambda0,
                                               std::uint32_t p) {
  const Weight mu = add(lambda0, rs.rho());
  __int128 num = 1, den = 1;
  for (int b : levi.levi_roots) {
    const std::int64_t a = rs.pairing(mu, rs.root(b));
    if (a < 1 || a > static_cast<std::int64_t>(p)) return std::nullopt;
    num *= a;
    den *= rs.pairing(rs.rho(), rs.root(b));
    const auto g = std::gcd(static_cast<long long>(num), static_cast<long long>(den));
    num /= g;
    den /= g;
  }
  if (den != 1) throw std::logic_error("Weyl dimension formula gave a fraction");
  return static_cast<std::size_t>(num);
}

CampaignReport verify_main_theorem(const CampaignSpec& spec) {
  const RootSystem rs = build_root_system(spec.type, spec.rank);
  if (!is_prime(spec.p)) throw std::invalid_argument(std::to_string(spec.p) + " is not prime");
  if (spec.enforce_hypotheses)
    if (auto why = hypothesis_violation(spec.type, spec.rank, spec.p)) throw std::invalid_argument(*why);
  if (!shape_check(spec.type, spec.rank, spec.I))
    throw std::invalid_argument("I = " + format_I(spec.I) + " is not an admissible shape for " + rs.label());
  const LeviDatum levi = levi_datum(rs, spec.I);
  const bool regular_nilpotent = static_cast<int>(levi.I.size()) == spec.rank;
  const std::size_t induced = power(spec.p, levi.u_roots.size());

  CampaignReport rep;
  rep.name = "main-theorem " + rs.label() + " p=" + std::to_string(spec.p) + " I=" + format_I(levi.I);
  std::set<Weight> seen;
  auto add_row = [&](const Weight& lambda, const std::string& source) {
    if (!seen.insert(lambda).second) return;
    const Weight l0 = decompose_weight(lambda, spec.p).lambda0;
    CampaignRow row;
    row.source = source;
    row.type = spec.type;
    row.rank = spec.rank;
    row.p = spec.p;
    row.I = levi.I;
    row.lambda = lambda;
    row.signs = spec.signs;
    row.chi_values = spec.chi_values;
    row.label = "lambda+rho=" + format_weight(add(lambda, rs.rho()));
    const bool in_c0 = in_first_dominant_alcove(rs, l0, spec.p) && is_p_regular(rs, l0, spec.p);
    if (regular_nilpotent || in_c0)
      row.expect = Expectation::Irreducible;
    else if (source == "representative" && (spec.type == RootType::A || is_p_regular(rs, l0, spec.p)))
      row.expect = Expectation::Irreducible;
    if (auto d = levi_weyl_dimension(rs, levi, l0, spec.p)) row.expected_dim = induced * *d;
    rep.rows.push_back(std::move(row));
  };
  for (auto policy : spec.policies) {
    switch (policy) {
      case WeightPolicy::Alcove: {
        auto ws = alcove_weights(rs, spec.p, true);
        if (ws.empty())
          rep.notes.push_back("C_0 contains no p-regular weight (p = " + std::to_string(spec.p) +
                              " < h = " + std::to_string(rs.coxeter_number()) + ")");
        for (const auto& w : ws) add_row(w, "alcove");
        break;
      }
      case WeightPolicy::Representatives:
        for (const auto& w : representative_weights(rs, spec.p, levi.I)) add_row(w, "representative");
        break;
      case WeightPolicy::Transversal: {
        const auto n = static_cast<std::size_t>(spec.rank);
        Weight w(n, 0);
        while (true) {
          add_row(w, "transversal");
          std::size_t k = n;
          while (k > 0 && ++w[k - 1] == static_cast<std::int64_t>(spec.p)) w[--k] = 0;
          if (k == 0) break;
        }
        break;
      }
      case WeightPolicy::Explicit:
        for (const auto& w : spec.explicit_weights) {
          if (w.size() != static_cast<std::size_t>(spec.rank)) throw DimensionMismatch("explicit weight has the wrong rank");
          add_row(w, "explicit");
        }
        break;
    }
  }
  for (const auto& row : rep.rows)
    if (row.expect == Expectation::None && row.source == "representative")
      rep.notes.push_back("representative " + row.label + " is p-singular; verdict recorded without expectation");
  run_rows(rep.rows, spec.build, spec.workers);
  return rep;
}

IntVec block_A_closed_form(const IntVec& r, int i) {
  const int n = static_cast<int>(r.size());
  if (i == 0) return r;
  const std::int64_t total = std::accumulate(r.begin(), r.end(), std::int64_t{0});
  IntVec out;
  for (int k = n - i + 2; k <= n; ++k) out.push_back(r[static_cast<std::size_t>(k - 1)]);
  out.push_back(-total);
  for (int k = 1; k <= n - i; ++k) out.push_back(r[static_cast<std::size_t>(k - 1)]);
  return out;
}

CampaignReport subregular_block_A(const BlockSpec& spec) {
  const RootSystem rs = build_root_system(RootType::A, spec.rank);
  require_block_input(rs, spec, 2);
  const int n = spec.rank;
  const std::uint32_t p = spec.p;
  const IntVec& r = spec.r;
  const std::int64_t total = std::accumulate(r.begin(), r.end(), std::int64_t{0});
  const std::size_t scale = power(p, static_cast<std::size_t>(rs.N() - 1));

  CampaignReport rep;
  rep.name = "subregular-A " + rs.label() + " p=" + std::to_string(p) + " lambda0+rho=" + format_weight(r);
  rep.checks.push_back({"sum of r_i lies in [0, p]", total >= 0 && total <= static_cast<std::int64_t>(p),
                        "sum = " + std::to_string(total)});

  auto rk = [&](int k) { return k == 0 ? static_cast<std::int64_t>(p) - total : r[static_cast<std::size_t>(k - 1)]; };
  Weight lambda = sub(r, rs.rho());
  std::vector<int> sigma = range_I(0, n);
  std::size_t expected_sum = 0;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) lambda = apply_word(rs, sigma, lambda, p);
    const IntVec got = add(lambda, rs.rho());
    const IntVec want = block_A_closed_form(r, i);
    rep.checks.push_back({"lambda_" + std::to_string(i) + " + rho closed form", got == want,
                          "computed " + format_weight(got) + ", closed form " + format_weight(want)});
    const std::size_t expected = static_cast<std::size_t>(rk(n - i)) * scale;
    expected_sum += expected;
    rep.rows.push_back(block_row(RootType::A, n, p, range_I(0, n - 1), lambda, "lambda_" + std::to_string(i), expected));
  }
  run_rows(rep.rows, spec.build, spec.workers);
  std::size_t built_sum = 0;
  for (const auto& row : rep.rows) built_sum += row.dim;
  std::int64_t r_sum = 0;
  for (int i = 0; i <= n; ++i) r_sum += rk(n - i);
  rep.checks.push_back({"block dimension sum", built_sum == expected_sum && expected_sum == static_cast<std::size_t>(r_sum) * scale,
                        "sum of dims " + std::to_string(built_sum) + ", p^(N-1) * sum r = " +
                            std::to_string(static_cast<std::size_t>(r_sum) * scale)});
  return rep;
}

BlockB block_B_weights(const RootSystem& rs, const IntVec& r, std::uint32_t p) {
  const int n = rs.rank();
  BlockB out;
  out.lambda_rho.assign(static_cast<std::size_t>(2 * n + 1), IntVec());
  out.primed_rho.assign(static_cast<std::size_t>(2 * n + 1), IntVec());
  const Weight lambda1 = sub(r, rs.rho());
  for (int i = 1; i <= 2 * n; ++i) {
    std::vector<int> w, wp;
    if (i <= n) {
      w = range_I(0, i - 1);
      if (i >= 2 && i <= n - 1) wp = range_I(1, i);
    } else {
      w = range_I(0, n);
      for (int k = n - 2; k >= 2 * n - i; --k) w.push_back(k);
      wp = range_I(1, n);
      for (int k = n - 2; k >= 2 * n - i; --k) wp.push_back(k);
    }
    const Weight li = apply_word(rs, w, lambda1, p);
    out.lambda_rho[static_cast<std::size_t>(i)] = add(li, rs.rho());
    if (i == 1)
      out.primed_rho[1] = out.lambda_rho[1];
    else if (i != n && i != 2 * n)
      out.primed_rho[static_cast<std::size_t>(i)] = add(apply_word(rs, wp, li, p), rs.rho());
  }
  return out;
}

std::vector<BlockDisplay> block_B_displays(const IntVec& r) {
  const int n = static_cast<int>(r.size());
  auto R = [&](int k) -> std::int64_t { return k >= 1 && k <= n ? r[static_cast<std::size_t>(k - 1)] : 0; };
  auto tail = [&](IntVec v, int from) {
    for (int k = from; k <= n; ++k) v.push_back(R(k));
    v.resize(static_cast<std::size_t>(n));
    return v;
  };
  std::int64_t mid2 = 0, mid3 = 0;
  for (int k = 2; k <= n - 1; ++k) mid2 += 2 * R(k);
  for (int k = 3; k <= n - 1; ++k) mid3 += 2 * R(k);
  std::vector<BlockDisplay> out;
  out.push_back({"lambda_2 + rho", 2, false, 3, tail({-R(1), R(1) + R(2)}, 3)});
  out.push_back({"lambda_3 + rho", 3, false, 4, tail({-(R(1) + R(2)), R(1), R(2) + R(3)}, 4)});
  out.push_back({"lambda_2n + rho", 2 * n, false, 2, tail({-(R(1) + mid2 + R(n))}, 2)});
  out.push_back({"lambda_2' + rho", 2, true, 4, tail({R(2), -(R(1) + R(2)), R(1) + R(2) + R(3)}, 4)});
  out.push_back({"lambda_3' + rho", 3, true, 5, tail({R(3), -(R(1) + R(2) + R(3)), R(1), R(2) + R(3) + R(4)}, 5)});
  out.push_back({"lambda_(2n-1)' + rho", 2 * n - 1, true, 3, tail({R(1), -(R(1) + R(2) + mid3 + R(n))}, 3)});
  return out;
}

CampaignReport subregular_block_B(const BlockSpec& spec) {
  const RootSystem rs = build_root_system(RootType::B, spec.rank);
  require_block_input(rs, spec, 2);
  const int n = spec.rank;
  const std::uint32_t p = spec.p;
  const IntVec& r = spec.r;
  const std::size_t scale = power(p, static_cast<std::size_t>(rs.N() - 1));

  CampaignReport rep;
  rep.name = "subregular-B " + rs.label() + " p=" + std::to_string(p) + " lambda1+rho=" + format_weight(r);
  std::int64_t s = 0;
  for (int k = 1; k < n; ++k) s += 2 * r[static_cast<std::size_t>(k - 1)];
  s += r[static_cast<std::size_t>(n - 1)];
  rep.checks.push_back({"2(r_1 + ... + r_(n-1)) + r_n lies in [0, p]", s >= 0 && s <= static_cast<std::int64_t>(p),
                        "value " + std::to_string(s)});

  const BlockB block = block_B_weights(rs, r, p);
  for (const auto& d : block_B_displays(r)) {
    if (n < d.min_rank) {
      rep.notes.push_back(d.name + " display needs rank >= " + std::to_string(d.min_rank) + "; not applicable at rank " +
                          std::to_string(n));
      continue;
    }
    const auto& got = d.primed ? block.primed_rho[static_cast<std::size_t>(d.index)]
                               : block.lambda_rho[static_cast<std::size_t>(d.index)];
    rep.checks.push_back({d.name + " display", got == d.tuple,
                          "computed " + format_weight(got) + ", display " + format_weight(d.tuple)});
  }
  for (int i = 1; i <= 2 * n - 1; ++i) {
    if (i == n) continue;
    const IntVec& pr = block.primed_rho[static_cast<std::size_t>(i)];
    const std::int64_t want = i <= n - 1 ? r[static_cast<std::size_t>(i - 1)] : r[static_cast<std::size_t>(2 * n - i - 1)];
    rep.checks.push_back({"first component of lambda_" + std::to_string(i) + "' + rho", pr.front() == want,
                          "computed " + format_weight(pr) + ", expected first component " + std::to_string(want)});
    rep.rows.push_back(block_row(RootType::B, n, p, range_I(1, n), sub(pr, rs.rho()), "lambda_" + std::to_string(i) + "'",
                                 static_cast<std::size_t>(want) * scale));
  }
  run_rows(rep.rows, spec.build, spec.workers);
  return rep;
}

CampaignReport negative_controls(std::uint32_t p, unsigned workers) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  CampaignReport rep;
  rep.name = "negative-controls p=" + std::to_string(p);
  auto baby_row = [&](RootType type, int rank, const Weight& lambda, Expectation e, std::size_t dim) {
    CampaignRow row;
    row.label = std::string(1, type_letter(type)) + std::to_string(rank) + " Z_0" + format_weight(lambda);
    row.source = "control";
    row.type = type;
    row.rank = rank;
    row.p = p;
    row.lambda = lambda;
    row.baby = true;
    row.expect = e;
    row.expected_dim = dim;
    return row;
  };
  for (std::int64_t l = 0; l < static_cast<std::int64_t>(p); ++l)
    rep.rows.push_back(baby_row(RootType::A, 1, {l}, l + 1 == static_cast<std::int64_t>(p) ? Expectation::Irreducible : Expectation::Reducible, p));
  rep.rows.push_back(baby_row(RootType::A, 2, {0, 0}, Expectation::Reducible, power(p, 3)));
  run_rows(rep.rows, BuildOptions{}, workers);

  auto alg1 = algebra_for(RootType::A, 1, SignConvention::Standard);
  PrimeField f(p);
  for (std::int64_t l = 0; l < static_cast<std::int64_t>(p); ++l) {
    auto m = build_baby_verma(alg1, PChar({}, {}, p, 1), {l}, f);
    const std::size_t rad = radical(m).dim();
    const std::size_t want = p - static_cast<std::size_t>(l + 1);
    rep.checks.push_back({"A1 lambda=" + std::to_string(l) + " radical dimension", rad == want,
                          "radical " + std::to_string(rad) + ", sl_2 closed form " + std::to_string(want)});
  }
  auto alg2 = algebra_for(RootType::A, 2, SignConvention::Standard);
  auto z = build_baby_verma(alg2, PChar({}, {}, p, 2), {0, 0}, f);
  const std::size_t head = z->dim() - radical(z).dim();
  rep.checks.push_back({"A2 Z_0(0) head dimension", head == 1, "head " + std::to_string(head)});
  return rep;
}

}  // namespace pbv
