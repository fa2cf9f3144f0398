#include "pbv/verma.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

namespace pbv {

namespace {

std::vector<bool> all_mask(int n) { return std::vector<bool>(static_cast<std::size_t>(n), true); }

SparseVec reversed(const SparseVec& v) {
  SparseVec r(v.dim());
  const auto& e = v.entries();
  const auto top = static_cast<std::uint32_t>(v.dim() - 1);
  for (auto it = e.rbegin(); it != e.rend(); ++it) r.push_back_unchecked(top - it->index, it->value);
  return r;
}

std::string describe(const ChevalleyAlgebra& alg, const std::string& kind, const std::vector<int>& I,
                     const Weight& lambda) {
  std::ostringstream os;
  os << kind << " " << alg.roots().label() << " I={";
  for (std::size_t k = 0; k < I.size(); ++k) os << (k ? "," : "") << I[k] + 1;
  os << "} lambda=" << format_weight(lambda);
  return os.str();
}

ModulePtr induce(std::shared_ptr<const ChevalleyAlgebra> alg, const PChar& chi, const Weight& lambda,
                 const PrimeField& f, const std::vector<int>& order, BaseModule base, std::vector<bool> active,
                 std::vector<bool> grade_mask, std::size_t cap, std::string description) {
  std::size_t dim = base.dim;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (dim > cap / f.p() + 1) throw CapExceeded("module dimension exceeds the cap of " + std::to_string(cap));
    dim *= f.p();
  }
  if (dim > cap)
    throw CapExceeded("module dimension " + std::to_string(dim) + " exceeds the cap of " + std::to_string(cap));
  InductionData data{alg, f, chi, order, active, std::move(base)};
  auto engine = std::make_shared<PbwEngine>(std::move(data));
  std::vector<RootCoeffs> depth(engine->dim());
  for (std::size_t i = 0; i < engine->dim(); ++i) depth[i] = engine->depth(i);
  auto factory = [engine](int g) { return engine->matrix(g); };
  auto m = std::make_shared<RepModule>(alg, f, engine->dim(), std::move(active), lambda, std::move(grade_mask),
                                       std::move(depth), factory);
  m->engine = engine;
  m->description = std::move(description);
  return m;
}

struct QuotientResult {
  ModulePtr module;
  std::vector<std::uint32_t> keep;
};

QuotientResult quotient_impl(const ModulePtr& m, const std::vector<SparseVec>& spanning) {
  const std::size_t D = m->dim();
  const PrimeField f = m->field();
  auto ech = std::make_shared<EchelonBasis>(D, f);
  for (const auto& s : spanning) {
    if (s.dim() != D) throw DimensionMismatch("subspace vector has the wrong dimension");
    ech->insert(reversed(s));
  }
  std::vector<int> gens = m->raising();
  gens.insert(gens.end(), m->lowering().begin(), m->lowering().end());
  for (const auto& s : spanning)
    for (int g : gens)
      if (!ech->reduce(reversed(m->op(g).apply(s, f))).empty())
        throw NotStable("subspace is not stable under " + m->alg().name(g));

  std::vector<bool> pivot(D, false);
  for (auto pr : ech->pivots()) pivot[D - 1 - pr] = true;
  std::vector<std::uint32_t> keep;
  auto pos = std::make_shared<std::vector<std::int64_t>>(D, -1);
  for (std::uint32_t j = 0; j < D; ++j)
    if (!pivot[j]) {
      (*pos)[j] = static_cast<std::int64_t>(keep.size());
      keep.push_back(j);
    }
  std::vector<RootCoeffs> depth;
  depth.reserve(keep.size());
  for (auto j : keep) depth.push_back(m->depth(j));
  std::vector<bool> active(static_cast<std::size_t>(m->alg().dim()));
  for (int g = 0; g < m->alg().dim(); ++g) active[static_cast<std::size_t>(g)] = m->acts(g);

  const std::size_t qd = keep.size();
  auto factory = [m, ech, pos, keep, qd, D](int g) {
    const PrimeField& f = m->field();
    const LinearOp& op = m->op(g);
    std::vector<SparseVec> cols;
    cols.reserve(qd);
    for (auto j : keep) {
      SparseVec r = ech->reduce(reversed(op.column(j)));
      SparseVec out(qd);
      const auto& e = r.entries();
      for (auto it = e.rbegin(); it != e.rend(); ++it) {
        auto q = (*pos)[D - 1 - it->index];
        out.push_back_unchecked(static_cast<std::uint32_t>(q), it->value);
      }
      cols.push_back(std::move(out));
    }
    (void)f;
    return LinearOp(qd, std::move(cols));
  };
  auto q = std::make_shared<RepModule>(m->alg_ptr(), f, qd, std::move(active), m->lambda(), m->grade_mask(),
                                       std::move(depth), factory);
  q->description = m->description + " quotient";
  return {q, keep};
}

class ComponentClosure {
 public:
  explicit ComponentClosure(const RepModule& m) : m_(m) {}

  SparseVec to_local(const SparseVec& v, int c) const {
    SparseVec out(m_.component_members(c).size());
    for (const auto& e : v.entries()) out.push_back_unchecked(m_.local_index(e.index), e.value);
    return out;
  }
  SparseVec to_global(const SparseVec& v, int c) const {
    SparseVec out(m_.dim());
    const auto& mem = m_.component_members(c);
    for (const auto& e : v.entries()) out.push_back_unchecked(mem[e.index], e.value);
    return out;
  }

  /// Closure of a homogeneous vector under the lowering operators.
  Generation run(const SparseVec& v, bool stop_at_top) {
    Generation g;
    if (v.empty()) return g;
    const PrimeField& f = m_.field();
    const int top = m_.component(0);
    const SparseVec top_local = SparseVec::unit(m_.component_members(top).size(), m_.local_index(0));
    std::vector<SparseVec> queue;
    std::size_t total = 0;
    auto push = [&](const SparseVec& w) -> bool {
      const int c = m_.component(w.entries().front().index);
      auto it = ech_.find(c);
      if (it == ech_.end()) it = ech_.emplace(c, EchelonBasis(m_.component_members(c).size(), f)).first;
      SparseVec r = it->second.reduce(to_local(w, c));
      if (r.empty()) return false;
      it->second.insert(r);
      ++total;
      queue.push_back(to_global(r, c));
      if (total == m_.dim()) return true;
      return stop_at_top && c == top && it->second.contains(top_local);
    };
    if (push(v)) {
      g.generates = true;
      g.dim = m_.dim();
      return g;
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int y : m_.lowering()) {
        SparseVec w = m_.op(y).apply(queue[head], f);
        if (w.empty()) continue;
        if (push(w)) {
          g.generates = true;
          g.dim = m_.dim();
          return g;
        }
      }
    }
    g.dim = total;
    g.generates = total == m_.dim();
    return g;
  }

 private:
  const RepModule& m_;
  std::unordered_map<int, EchelonBasis> ech_;
};

std::size_t line_count(std::size_t d, std::uint32_t p, std::size_t cap) {
  std::size_t total = 0, pw = 1;
  for (std::size_t k = 0; k < d; ++k) {
    total += pw;
    if (total > cap) return cap + 1;
    if (pw > cap) pw = cap + 1;
    else pw *= p;
  }
  return total;
}

/// Calls visit(v) on a representative of every line in span(basis) until it returns false.
template <class Visit>
void for_each_line(const std::vector<SparseVec>& basis, const PrimeField& f, Visit visit) {
  const std::size_t d = basis.size();
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::vector<Scalar> coef(d - lead - 1, 0);
    while (true) {
      SparseVec v = basis[lead];
      for (std::size_t k = 0; k < coef.size(); ++k)
        if (coef[k]) v = axpy(v, coef[k], basis[lead + 1 + k], f);
      if (!visit(v)) return;
      std::size_t k = 0;
      while (k < coef.size() && ++coef[k] == f.p()) coef[k++] = 0;
      if (k == coef.size()) break;
    }
  }
}

std::vector<SparseVec> non_generating_maximal(const RepModule& m, std::size_t line_cap) {
  std::vector<SparseVec> bad;
  auto rep = maximal_vectors(m);
  for (std::size_t k = 0; k < rep.profile.size(); ++k) {
    if (!rep.profile[k].top_grade) {
      bad.insert(bad.end(), rep.bases[k].begin(), rep.bases[k].end());
      continue;
    }
    if (line_count(rep.bases[k].size(), m.field().p(), line_cap) > line_cap)
      throw CapExceeded("too many maximal lines in one component");
    for_each_line(rep.bases[k], m.field(), [&](const SparseVec& v) {
      if (!generates_maximal(m, v).generates) bad.push_back(v);
      return true;
    });
  }
  return bad;
}

Subspace lowering_closure(const RepModule& m, const std::vector<SparseVec>& seed) {
  std::vector<const LinearOp*> ops;
  for (int y : m.lowering()) ops.push_back(&m.op(y));
  EchelonBasis ech(m.dim(), m.field());
  std::vector<SparseVec> queue;
  for (const auto& s : seed) {
    SparseVec r = ech.reduce(s);
    if (!r.empty()) {
      ech.insert(r);
      queue.push_back(r);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto* op : ops) {
      SparseVec r = ech.reduce(op->apply(queue[head], m.field()));
      if (r.empty()) continue;
      ech.insert(r);
      queue.push_back(std::move(r));
    }
  return Subspace{m.dim(), ech.rref()};
}

}  // namespace

RepModule::RepModule(std::shared_ptr<const ChevalleyAlgebra> alg, PrimeField f, std::size_t dim,
                     std::vector<bool> active, Weight lambda, std::vector<bool> grade_mask,
                     std::vector<RootCoeffs> depth, Factory factory)
    : alg_(std::move(alg)),
      field_(f),
      dim_(dim),
      active_(std::move(active)),
      lambda_(std::move(lambda)),
      grade_mask_(std::move(grade_mask)),
      depth_(std::move(depth)),
      factory_(std::move(factory)) {
  const auto& rs = alg_->roots();
  const int n = rs.rank();
  if (active_.size() != static_cast<std::size_t>(alg_->dim())) throw std::invalid_argument("active mask has the wrong size");
  if (depth_.size() != dim_) throw std::invalid_argument("depth table has the wrong size");
  if (grade_mask_.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("grade mask has the wrong size");
  for (int i = 0; i < n; ++i) {
    const int r = rs.simple_root_index(i);
    if (acts(alg_->x(r))) raising_.push_back(alg_->x(r));
    if (acts(alg_->y(r))) lowering_.push_back(alg_->y(r));
  }
  cache_.resize(static_cast<std::size_t>(alg_->dim()));

  std::map<ComponentKey, int> ids;
  component_of_.resize(dim_);
  local_.resize(dim_);
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    ComponentKey key;
    Weight w = weight(idx);
    for (auto& c : w) c = f.reduce(c);
    key.weight_mod_p = std::move(w);
    key.grade = depth_[idx];
    for (int i = 0; i < n; ++i)
      if (!grade_mask_[static_cast<std::size_t>(i)]) key.grade[static_cast<std::size_t>(i)] = 0;
    auto [it, fresh] = ids.emplace(key, static_cast<int>(keys_.size()));
    if (fresh) {
      keys_.push_back(key);
      members_.emplace_back();
    }
    component_of_[idx] = it->second;
    local_[idx] = static_cast<std::uint32_t>(members_[static_cast<std::size_t>(it->second)].size());
    members_[static_cast<std::size_t>(it->second)].push_back(static_cast<std::uint32_t>(idx));
  }
}

std::vector<int> RepModule::active_ids() const {
  std::vector<int> out;
  for (int g = 0; g < alg_->dim(); ++g)
    if (acts(g)) out.push_back(g);
  return out;
}

const LinearOp& RepModule::op(int g) const {
  if (g < 0 || g >= alg_->dim() || !acts(g)) throw std::out_of_range("generator does not act on this module");
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = cache_[static_cast<std::size_t>(g)];
  if (!slot) slot = std::make_unique<LinearOp>(factory_(g));
  return *slot;
}

Weight RepModule::weight(std::size_t idx) const {
  Weight w = lambda_;
  Weight d = alg_->roots().root_as_weight(depth_[idx]);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= d[i];
  return w;
}

bool RepModule::top_grade(int c) const {
  const auto& g = component_key(c).grade;
  return std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x == 0; });
}

BaseModule as_base_module(const RepModule& m) {
  BaseModule b;
  b.dim = m.dim();
  b.ops.assign(static_cast<std::size_t>(m.alg().dim()), LinearOp());
  for (int g : m.active_ids()) b.ops[static_cast<std::size_t>(g)] = m.op(g);
  b.depth.reserve(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) b.depth.push_back(m.depth(i));
  return b;
}

ModulePtr build_levi_simple(std::shared_ptr<const ChevalleyAlgebra> alg, const LeviDatum& levi, const Weight& lambda,
                            const PrimeField& f, const BuildOptions& opts) {
  const auto& rs = alg->roots();
  const int n = rs.rank();
  if (lambda.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("weight has the wrong rank");
  std::vector<bool> active(static_cast<std::size_t>(alg->dim()), false);
  for (int i = 0; i < n; ++i) active[static_cast<std::size_t>(alg->h(i))] = true;
  const std::string desc = describe(*alg, "levi-simple", levi.I, lambda);
  if (levi.levi_roots.empty()) {
    auto base = one_dimensional_base(*alg, lambda, f);
    auto factory = [base](int g) { return base.ops[static_cast<std::size_t>(g)]; };
    auto m = std::make_shared<RepModule>(alg, f, 1, active, lambda, all_mask(n), base.depth, factory);
    m->description = desc;
    return m;
  }
  for (int r : levi.levi_roots) {
    active[static_cast<std::size_t>(alg->x(r))] = true;
    active[static_cast<std::size_t>(alg->y(r))] = true;
  }
  auto order = fallback_order(rs, levi.levi_roots).roots;
  auto z = induce(alg, PChar({}, {}, f.p(), n), lambda, f, order, one_dimensional_base(*alg, lambda, f), active,
                  all_mask(n), opts.cap, desc);
  Subspace r = radical(z, opts.line_cap);
  auto q = quotient_impl(z, r.basis).module;
  std::const_pointer_cast<RepModule>(q)->description = desc;
  return q;
}

ModulePtr build_induced(std::shared_ptr<const ChevalleyAlgebra> alg, const PChar& chi, const Weight& lambda,
                        const PrimeField& f, const std::vector<int>& order, BaseModule base, const BuildOptions& opts) {
  const int n = alg->roots().rank();
  std::vector<bool> mask = all_mask(n);
  for (int i : chi.I()) mask[static_cast<std::size_t>(i)] = false;
  return induce(alg, chi, lambda, f, order, std::move(base), std::vector<bool>(static_cast<std::size_t>(alg->dim()), true),
                mask, opts.cap, describe(*alg, "induced", chi.I(), lambda));
}

ModulePtr build_parabolic_baby_verma(std::shared_ptr<const ChevalleyAlgebra> alg, const PChar& chi, const Weight& lambda,
                                     const PrimeField& f, const BuildOptions& opts) {
  const auto& rs = alg->roots();
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("weight has the wrong rank");
  const LeviDatum levi = levi_datum(rs, chi.I());
  std::size_t bound = 1;
  for (std::size_t k = 0; k < levi.u_roots.size() && bound <= opts.cap; ++k) bound *= f.p();
  if (bound > opts.cap) throw CapExceeded("module dimension exceeds the cap of " + std::to_string(opts.cap));
  auto L = build_levi_simple(alg, levi, lambda, f, opts);
  const auto order = opts.fallback_order ? fallback_order(rs, levi.u_roots).roots : fix_order(rs, levi).roots;
  auto m = build_induced(alg, chi, lambda, f, order, as_base_module(*L), opts);
  std::const_pointer_cast<RepModule>(m)->description = describe(*alg, "parabolic-baby-verma", chi.I(), lambda);
  return m;
}

ModulePtr build_baby_verma(std::shared_ptr<const ChevalleyAlgebra> alg, const PChar& chi, const Weight& lambda,
                           const PrimeField& f, const BuildOptions& opts) {
  const auto& rs = alg->roots();
  if (lambda.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("weight has the wrong rank");
  std::vector<int> all(static_cast<std::size_t>(rs.N()));
  for (int k = 0; k < rs.N(); ++k) all[static_cast<std::size_t>(k)] = k;
  std::vector<int> order;
  if (!opts.fallback_order && static_cast<int>(chi.I().size()) == rs.rank())
    order = fix_order(rs, levi_datum(rs, chi.I())).roots;
  else
    order = fallback_order(rs, all).roots;
  auto m = build_induced(alg, chi, lambda, f, order, one_dimensional_base(*alg, lambda, f), opts);
  std::const_pointer_cast<RepModule>(m)->description = describe(*alg, "baby-verma", chi.I(), lambda);
  return m;
}

std::size_t MaxVectorReport::total() const {
  std::size_t t = 0;
  for (const auto& p : profile) t += p.kernel_dim;
  return t;
}

MaxVectorReport maximal_vectors(const RepModule& m) {
  MaxVectorReport rep;
  const PrimeField& f = m.field();
  std::vector<const LinearOp*> ops;
  for (int x : m.raising()) ops.push_back(&m.op(x));
  for (int c = 0; c < static_cast<int>(m.component_count()); ++c) {
    const auto& mem = m.component_members(c);
    const std::size_t s = mem.size();
    DenseEchelon ech(s, f);
    for (std::size_t k = 0; k < ops.size() && ech.rank() < s; ++k) {
      std::map<std::uint32_t, std::vector<Scalar>> rows;
      for (std::size_t l = 0; l < s; ++l)
        for (const auto& e : ops[k]->column(mem[l]).entries()) {
          auto& row = rows[e.index];
          if (row.empty()) row.assign(s, 0);
          row[l] = e.value;
        }
      for (auto& [_, row] : rows) {
        ech.insert(std::move(row));
        if (ech.rank() == s) break;
      }
    }
    auto kernel = ech.nullspace();
    if (kernel.empty()) continue;
    ComponentProfile prof;
    prof.weight_mod_p = m.component_key(c).weight_mod_p;
    prof.grade = m.component_key(c).grade;
    prof.size = s;
    prof.kernel_dim = kernel.size();
    prof.top_grade = m.top_grade(c);
    std::vector<SparseVec> basis;
    for (const auto& kv : kernel) {
      SparseVec v(m.dim());
      for (std::size_t l = 0; l < s; ++l)
        if (kv[l]) v.push_back_unchecked(mem[l], kv[l]);
      basis.push_back(std::move(v));
    }
    rep.profile.push_back(std::move(prof));
    rep.bases.push_back(std::move(basis));
    rep.components.push_back(c);
  }
  return rep;
}

Generation generates(const RepModule& m, const SparseVec& v) {
  if (v.dim() != m.dim()) throw DimensionMismatch("vector has the wrong dimension");
  std::vector<const LinearOp*> ops;
  for (int g : m.raising()) ops.push_back(&m.op(g));
  for (int g : m.lowering()) ops.push_back(&m.op(g));
  EchelonBasis ech(m.dim(), m.field());
  std::vector<SparseVec> queue;
  if (!v.empty()) {
    ech.insert(v);
    queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size() && ech.rank() < m.dim(); ++head)
    for (const auto* op : ops) {
      SparseVec r = ech.reduce(op->apply(queue[head], m.field()));
      if (r.empty()) continue;
      ech.insert(r);
      queue.push_back(std::move(r));
    }
  return {ech.rank() == m.dim() && m.dim() > 0, ech.rank()};
}

Generation generates_maximal(const RepModule& m, const SparseVec& v) {
  if (v.dim() != m.dim()) throw DimensionMismatch("vector has the wrong dimension");
  if (v.empty()) return {};
  const int c = m.component(v.entries().front().index);
  for (const auto& e : v.entries())
    if (m.component(e.index) != c) throw std::invalid_argument("vector is not homogeneous");
  ComponentClosure closure(m);
  return closure.run(v, true);
}

IrreducibilityReport is_irreducible(const RepModule& m, std::size_t line_cap) {
  IrreducibilityReport out;
  out.dim = m.dim();
  if (m.dim() == 0) return out;
  auto rep = maximal_vectors(m);
  out.profile = rep.profile;
  for (std::size_t k = 0; k < rep.profile.size(); ++k) {
    if (rep.profile[k].top_grade) continue;
    ComponentClosure closure(m);
    out.witness = Witness{rep.bases[k].front(), closure.run(rep.bases[k].front(), false).dim, rep.profile[k]};
    return out;
  }
  for (std::size_t k = 0; k < rep.profile.size(); ++k) {
    if (line_count(rep.bases[k].size(), m.field().p(), line_cap) > line_cap)
      throw CapExceeded("too many maximal lines in one component");
    bool found = false;
    for_each_line(rep.bases[k], m.field(), [&](const SparseVec& v) {
      ++out.lines_checked;
      auto g = generates_maximal(m, v);
      if (g.generates) return true;
      ComponentClosure closure(m);
      out.witness = Witness{v, closure.run(v, false).dim, rep.profile[k]};
      found = true;
      return false;
    });
    if (found) return out;
  }
  out.irreducible = true;
  return out;
}

Subspace radical(const ModulePtr& m, std::size_t line_cap) {
  const std::size_t D = m->dim();
  EchelonBasis R(D, m->field());
  while (true) {
    QuotientResult q = R.rank() == 0 ? QuotientResult{m, {}} : quotient_impl(m, R.basis());
    if (R.rank() == 0) {
      q.keep.resize(D);
      for (std::uint32_t j = 0; j < D; ++j) q.keep[j] = j;
    }
    auto bad = non_generating_maximal(*q.module, line_cap);
    if (bad.empty()) break;
    Subspace s = lowering_closure(*q.module, bad);
    for (const auto& v : s.basis) {
      SparseVec lifted(D);
      for (const auto& e : v.entries()) lifted.push_back_unchecked(q.keep[e.index], e.value);
      R.insert(lifted);
    }
  }
  return Subspace{D, R.rref()};
}

ModulePtr quotient(const ModulePtr& m, const Subspace& s) {
  if (s.ambient != m->dim()) throw DimensionMismatch("subspace lives in a different space");
  return quotient_impl(m, s.basis).module;
}

bool check_surjection(std::shared_ptr<const ChevalleyAlgebra> alg, const PChar& chi, const Weight& lambda,
                      const PrimeField& f, const BuildOptions& opts, std::string* detail) {
  const auto& rs = alg->roots();
  const LeviDatum levi = levi_datum(rs, chi.I());
  auto P = build_parabolic_baby_verma(alg, chi, lambda, f, opts);
  const auto& pdata = P->engine->data();
  std::vector<int> order = pdata.u_roots;
  const auto levi_order = fallback_order(rs, levi.levi_roots).roots;
  order.insert(order.end(), levi_order.begin(), levi_order.end());
  auto Z = build_induced(alg, chi, lambda, f, order, one_dimensional_base(*alg, lambda, f), opts);
  const auto& base = pdata.base;
  const std::size_t mu = pdata.u_roots.size();

  std::vector<SparseVec> phi(Z->dim());
  for (std::size_t j = 0; j < Z->dim(); ++j) {
    auto exps = Z->engine->exponents(j);
    SparseVec l = SparseVec::unit(base.dim, 0);
    for (std::size_t k = order.size(); k-- > mu;)
      for (int t = 0; t < exps[k] && !l.empty(); ++t) l = base.ops[static_cast<std::size_t>(alg->y(order[k]))].apply(l, f);
    std::vector<int> a(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(mu));
    std::vector<std::pair<std::uint32_t, std::int64_t>> pairs;
    for (const auto& e : l.entries())
      pairs.emplace_back(static_cast<std::uint32_t>(P->engine->index_of(a, e.index)), e.value);
    phi[j] = SparseVec::from_pairs(P->dim(), std::move(pairs), f);
  }
  LinearOp Phi(P->dim(), phi);
  std::vector<int> gens = Z->raising();
  gens.insert(gens.end(), Z->lowering().begin(), Z->lowering().end());
  for (int g : gens)
    for (std::size_t j = 0; j < Z->dim(); ++j) {
      SparseVec lhs = Phi.apply(Z->op(g).column(j), f);
      SparseVec rhs = P->op(g).apply(phi[j], f);
      if (!(lhs == rhs)) {
        if (detail) *detail = "map does not commute with " + alg->name(g) + " on basis vector " + std::to_string(j);
        return false;
      }
    }
  EchelonBasis img(P->dim(), f);
  for (const auto& v : phi) {
    img.insert(v);
    if (img.rank() == P->dim()) break;
  }
  if (img.rank() != P->dim()) {
    if (detail) *detail = "image has dimension " + std::to_string(img.rank()) + " of " + std::to_string(P->dim());
    return false;
  }
  if (detail) *detail = "surjective homomorphism of dimension " + std::to_string(Z->dim()) + " onto " + std::to_string(P->dim());
  return true;
}

std::size_t representation_defects(const RepModule& m, std::size_t samples, std::uint64_t seed) {
  const PrimeField& f = m.field();
  const auto ids = m.active_ids();
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> cols;
  if (samples == 0 || samples >= m.dim()) {
    cols.resize(m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j) cols[j] = j;
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, m.dim() - 1);
    for (std::size_t k = 0; k < samples; ++k) cols.push_back(pick(rng));
  }
  std::size_t defects = 0;
  for (std::size_t ai = 0; ai < ids.size(); ++ai)
    for (std::size_t bi = ai + 1; bi < ids.size(); ++bi) {
      const int a = ids[ai], b = ids[bi];
      const auto& br = m.alg().bracket(a, b);
      bool closed = std::all_of(br.begin(), br.end(), [&](const auto& t) { return m.acts(t.first); });
      if (!closed) continue;
      const LinearOp& A = m.op(a);
      const LinearOp& B = m.op(b);
      for (std::size_t j : cols) {
        SparseVec v = add(A.apply(B.column(j), f), B.apply(A.column(j), f).scaled(f.neg(1), f), f);
        for (const auto& [z, c] : br) v = axpy(v, f.neg(f.reduce(c)), m.op(z).column(j), f);
        if (!v.empty()) ++defects;
      }
    }
  return defects;
}

std::size_t frobenius_defects(const RepModule& m, const PChar& chi) {
  const PrimeField& f = m.field();
  const auto& alg = m.alg();
  std::size_t defects = 0;
  for (int g : m.active_ids()) {
    const LinearOp& A = m.op(g);
    const BasisElement b = alg.element(g);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      SparseVec v = A.column(j);
      for (std::uint32_t t = 1; t < f.p() && !v.empty(); ++t) v = A.apply(v, f);
      SparseVec expect(m.dim());
      if (b.kind == BasisKind::H) expect = A.column(j);
      else if (b.kind == BasisKind::Y) {
        Scalar s = chi.wrap_scalar(alg.roots(), b.index);
        if (s) expect = SparseVec::unit(m.dim(), static_cast<std::uint32_t>(j), s);
      }
      if (!(v == expect)) ++defects;
    }
  }
  return defects;
}

}  // namespace pbv
