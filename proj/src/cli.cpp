#include "pbv/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "pbv/campaigns.hpp"
#include "pbv/chevalley.hpp"
#include "pbv/pbw.hpp"
#include "pbv/report.hpp"
#include "pbv/verma.hpp"

namespace pbv {

namespace {

std::shared_ptr<const ChevalleyAlgebra> algebra_of(const CliConfig& c) {
  const RootSystem rs = build_root_system(parse_root_type(c.type), c.rank);
  return std::make_shared<const ChevalleyAlgebra>(
      build_algebra(rs, c.flipped_signs ? SignConvention::Flipped : SignConvention::Standard));
}

BuildOptions build_options(const CliConfig& c) {
  BuildOptions o;
  o.cap = c.cap;
  o.line_cap = c.line_cap;
  o.fallback_order = c.fallback_order;
  return o;
}

void validate(const CliConfig& c, const std::vector<int>& I, bool need_shape) {
  if (!is_prime(c.p)) throw std::invalid_argument(std::to_string(c.p) + " is not prime");
  if (!c.skip_hypotheses)
    if (auto why = hypothesis_violation(parse_root_type(c.type), c.rank, c.p)) throw std::invalid_argument(*why);
  if (need_shape && !I.empty() && !shape_check(parse_root_type(c.type), c.rank, I))
    throw std::invalid_argument("I = {" + join_ints(c.I) + "} is not an admissible shape for " + c.type +
                                std::to_string(c.rank));
}

bool use_baby(const CliConfig& c, const std::vector<int>& I) {
  if (c.module == "baby") return true;
  if (c.module == "parabolic") return false;
  if (c.module == "auto") return I.empty();
  throw std::invalid_argument("module must be auto, parabolic or baby");
}

ModulePtr build_from(const CliConfig& c, const std::shared_ptr<const ChevalleyAlgebra>& alg, const std::vector<int>& I,
                     const Weight& lambda, PChar* chi_out = nullptr) {
  PrimeField f(c.p);
  PChar chi = make_pchar(*alg, I, c.chi_values, f);
  if (chi_out) *chi_out = chi;
  const BuildOptions o = build_options(c);
  return use_baby(c, I) ? build_baby_verma(alg, chi, lambda, f, o) : build_parabolic_baby_verma(alg, chi, lambda, f, o);
}

int generator_id(const ChevalleyAlgebra& alg, const std::string& name) {
  for (int g = 0; g < alg.dim(); ++g)
    if (alg.name(g) == name) return g;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

void print_campaign(const CampaignReport& r, std::ostream& out) {
  out << r.name << "\n";
  for (const auto& row : r.rows) {
    out << "  " << (row.passed() ? "ok  " : "FAIL") << " " << row.label << " [" << row.source << "] dim=" << row.dim;
    if (row.expected_dim) out << " expected_dim=" << *row.expected_dim;
    out << " verdict=" << row.verdict() << " expect=" << expectation_name(row.expect);
    if (row.witness_dim) out << " witness_dim=" << row.witness_dim;
    if (!row.error.empty()) out << " (" << row.error << ")";
    out << " " << static_cast<long long>(row.millis) << "ms\n";
  }
  for (const auto& ch : r.checks) out << "  " << (ch.ok ? "ok  " : "FAIL") << " check " << ch.name << ": " << ch.detail << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (r.skipped()) out << "  " << r.skipped() << " row(s) skipped at the resource cap\n";
  out << (r.passed() ? "PASSED" : "FAILED") << "\n";
}

}  // namespace

int cmd_check(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const auto I = resolve_I(c);
  validate(c, I, true);
  const Weight lambda = resolve_lambda(c);
  auto alg = algebra_of(c);
  auto m = build_from(c, alg, I, lambda);
  auto rep = is_irreducible(*m, c.line_cap);
  ModuleDescriptor d{parse_root_type(c.type), c.rank, c.p, I, lambda, use_baby(c, I) ? "baby" : "parabolic"};
  const auto j = to_json(d, rep);
  out << j.dump(2) << "\n";
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << j.dump(2) << "\n";
  }
  err << (rep.irreducible ? "irreducible" : "reducible") << ", dim " << rep.dim << "\n";
  return rep.irreducible ? kExitOk : kExitFail;
}

int cmd_campaign(const CliConfig& c, std::ostream& out, std::ostream& err) {
  CampaignReport rep;
  const auto type = parse_root_type(c.type);
  if (c.target == "main-theorem") {
    CampaignSpec s;
    s.type = type;
    s.rank = c.rank;
    s.p = c.p;
    s.I = resolve_I(c);
    s.policies.clear();
    for (const auto& name : [&] {
           std::vector<std::string> v;
           std::stringstream ss(c.policies);
           std::string item;
           while (std::getline(ss, item, ','))
             if (!item.empty()) v.push_back(item);
           return v;
         }())
      s.policies.push_back(parse_policy(name));
    if (c.lambda || c.lambda_rho) {
      s.explicit_weights.push_back(resolve_lambda(c));
      s.policies.push_back(WeightPolicy::Explicit);
    }
    s.build = build_options(c);
    s.signs = c.flipped_signs ? SignConvention::Flipped : SignConvention::Standard;
    s.chi_values = c.chi_values;
    s.workers = c.workers;
    s.enforce_hypotheses = !c.skip_hypotheses;
    rep = verify_main_theorem(s);
  } else if (c.target == "subregular-A" || c.target == "subregular-B") {
    BlockSpec s;
    s.rank = c.rank;
    s.p = c.p;
    if (c.lambda_rho)
      s.r = *c.lambda_rho;
    else if (c.lambda) {
      s.r = *c.lambda;
      for (auto& x : s.r) x += 1;
    } else
      throw std::invalid_argument("block campaigns need --lambda-rho (or --lambda)");
    s.build = build_options(c);
    s.workers = c.workers;
    rep = c.target == "subregular-A" ? subregular_block_A(s) : subregular_block_B(s);
  } else if (c.target == "negative-controls") {
    if (!is_prime(c.p)) throw std::invalid_argument(std::to_string(c.p) + " is not prime");
    rep = negative_controls(c.p, c.workers);
  } else {
    throw std::invalid_argument("unknown campaign '" + c.target + "'");
  }
  print_campaign(rep, out);
  if (!c.out.empty()) write_campaign(rep, c.out);
  if (!rep.passed()) {
    for (const auto* row : rep.failures()) err << "failed: " << row->label << " verdict " << row->verdict() << "\n";
    for (const auto& ch : rep.checks)
      if (!ch.ok) err << "failed check: " << ch.name << "\n";
    return kExitFail;
  }
  return kExitOk;
}

int cmd_dump(const CliConfig& c, std::ostream& out, std::ostream&) {
  auto alg = algebra_of(c);
  const auto& rs = alg->roots();
  if (c.target == "brackets") {
    out << alg->export_brackets();
    return kExitOk;
  }
  const auto I = resolve_I(c);
  if (c.target == "order") {
    out << format_order(rs, fix_order(rs, levi_datum(rs, I))) << "\n";
    return kExitOk;
  }
  if (c.target == "action") {
    validate(c, I, true);
    if (c.generator.empty()) throw std::invalid_argument("dump action needs --generator");
    auto m = build_from(c, alg, I, resolve_lambda(c));
    out << export_triplets(m->op(generator_id(*alg, c.generator)));
    return kExitOk;
  }
  throw std::invalid_argument("unknown dump kind '" + c.target + "' (brackets, order, action)");
}

int cmd_selftest(const CliConfig&, std::ostream& out, std::ostream&) {
  bool all = true;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    all = all && ok;
  };
  PrimeField f5(5);
  auto a1 = std::make_shared<const ChevalleyAlgebra>(build_algebra(build_root_system(RootType::A, 1)));
  for (std::int64_t l = 0; l < 5; ++l) {
    auto m = build_baby_verma(a1, PChar({}, {}, 5, 1), {l}, f5);
    const bool irr = is_irreducible(*m).irreducible;
    report("A1 p=5 Z_0(" + std::to_string(l) + ") verdict and radical",
           irr == (l == 4) && radical(m).dim() == static_cast<std::size_t>(4 - l));
  }
  auto a2 = std::make_shared<const ChevalleyAlgebra>(build_algebra(build_root_system(RootType::A, 2)));
  auto chi = make_pchar(*a2, {0}, {}, f5);
  auto m = build_parabolic_baby_verma(a2, chi, {0, 0}, f5);
  report("A2 p=5 I={1} lambda=0 irreducible of dim 25", m->dim() == 25 && is_irreducible(*m).irreducible);
  report("A2 p=5 I={1} commutator identities", representation_defects(*m) == 0);
  report("A2 p=5 I={1} Frobenius relations", frobenius_defects(*m, chi) == 0);
  auto b2 = std::make_shared<const ChevalleyAlgebra>(build_algebra(build_root_system(RootType::B, 2)));
  auto chib = make_pchar(*b2, {1}, {}, f5);
  auto mb = build_parabolic_baby_verma(b2, chib, {0, 1}, f5);
  report("B2 p=5 I={2} lambda+rho=(1,2) irreducible of dim 125", mb->dim() == 125 && is_irreducible(*mb).irreducible);
  return all ? kExitOk : kExitFail;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parabolic baby Verma modules over F_p: construction and irreducibility"};
  app.require_subcommand(1);
  CliConfig c;
  std::string config_path, I_text, lambda_text, lambda_rho_text, chi_text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value configuration file (command-line flags override it)");
    sub->add_option("--type", c.type, "root system type: A, B, C or D");
    sub->add_option("--rank", c.rank, "rank n");
    sub->add_option("-p,--prime", c.p, "the prime p");
    sub->add_option("--I", I_text, "simple roots where chi is nonzero, 1-based, comma separated");
    sub->add_option("--lambda", lambda_text, "weight lambda as <lambda, alpha_i^vee>, comma separated");
    sub->add_option("--lambda-rho", lambda_rho_text, "weight given as lambda + rho (subtract 1 from every coordinate)");
    sub->add_option("--chi", chi_text, "values of chi(y_alpha) on I, default all 1");
    sub->add_option("--cap", c.cap, "largest module dimension built");
    sub->add_option("--line-cap", c.line_cap, "largest number of maximal lines enumerated per component");
    sub->add_option("--out", c.out, "output file (check, dump) or report prefix (campaign)");
    sub->add_option("--workers", c.workers, "campaign worker threads");
    sub->add_option("--seed", c.seed, "seed for randomised checks");
    sub->add_flag("--fallback-order", c.fallback_order, "use the height order instead of the fixed orders");
    sub->add_flag("--flipped-signs", c.flipped_signs, "negate the root vectors of even height");
    sub->add_flag("--skip-hypotheses", c.skip_hypotheses, "do not enforce the standing hypotheses on p");
  };
  auto* check = app.add_subcommand("check", "build a module and decide irreducibility");
  common(check);
  check->add_option("--module", c.module, "auto (baby Verma when I is empty), parabolic or baby");
  auto* campaign = app.add_subcommand("campaign", "run a verification campaign");
  common(campaign);
  campaign->add_option("name", c.target, "main-theorem, subregular-A, subregular-B or negative-controls")->required();
  campaign->add_option("--policies", c.policies, "main-theorem weights: alcove, representatives, transversal");
  auto* dump = app.add_subcommand("dump", "export brackets, action matrices or monomial orders");
  common(dump);
  dump->add_option("kind", c.target, "brackets, order or action")->required();
  dump->add_option("--generator", c.generator, "basis element for dump action, e.g. h1, x(1,0), y(1,1)");
  dump->add_option("--module", c.module, "auto, parabolic or baby");
  auto* selftest = app.add_subcommand("selftest", "quick internal consistency checks");
  common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitError;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config_path.empty()) {
      CliConfig file = load_config(config_path);
      auto given = [&](const std::string& name) { return sub->count(name) > 0; };
      if (!given("--type")) c.type = file.type;
      if (!given("--rank")) c.rank = file.rank;
      if (!given("-p")) c.p = file.p;
      if (!given("--I")) c.I = file.I;
      if (!given("--lambda") && !given("--lambda-rho")) {
        c.lambda = file.lambda;
        c.lambda_rho = file.lambda_rho;
      }
      if (!given("--chi")) c.chi_values = file.chi_values;
      if (!given("--cap")) c.cap = file.cap;
      if (!given("--line-cap")) c.line_cap = file.line_cap;
      if (!given("--out")) c.out = file.out;
      if (!given("--workers")) c.workers = file.workers;
      if (!given("--seed")) c.seed = file.seed;
      if (!given("--fallback-order")) c.fallback_order = file.fallback_order;
      if (!given("--flipped-signs")) c.flipped_signs = file.flipped_signs;
      if (!given("--skip-hypotheses")) c.skip_hypotheses = file.skip_hypotheses;
      if (sub->get_option_no_throw("--module") && !given("--module")) c.module = file.module;
      if (sub->get_option_no_throw("--policies") && !given("--policies")) c.policies = file.policies;
      if (sub->get_option_no_throw("--generator") && !given("--generator")) c.generator = file.generator;
    }
    c.command = sub->get_name();
    if (sub->count("--I")) {
      c.I.clear();
      for (auto x : parse_int_list(I_text)) c.I.push_back(static_cast<int>(x));
    }
    if (sub->count("--lambda")) c.lambda = parse_int_list(lambda_text);
    if (sub->count("--lambda-rho")) c.lambda_rho = parse_int_list(lambda_rho_text);
    if (sub->count("--chi")) c.chi_values = parse_int_list(chi_text);

    if (c.command == "check") return cmd_check(c, out, err);
    if (c.command == "campaign") return cmd_campaign(c, out, err);
    if (c.command == "dump") return cmd_dump(c, out, err);
    return cmd_selftest(c, out, err);
  } catch (const CapExceeded& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"pbv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pbv
