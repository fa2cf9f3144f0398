#include "pbv/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pbv {

namespace {

std::vector<int> one_based(const std::vector<int>& I) {
  std::vector<int> out;
  for (int i : I) out.push_back(i + 1);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

nlohmann::json to_json(const ComponentProfile& c) {
  return {{"weight_mod_p", c.weight_mod_p},
          {"grade", c.grade},
          {"size", c.size},
          {"kernel_dim", c.kernel_dim},
          {"top_grade", c.top_grade}};
}

nlohmann::json to_json(const ModuleDescriptor& d, const IrreducibilityReport& r) {
  nlohmann::json profile = nlohmann::json::array();
  for (const auto& c : r.profile) profile.push_back(to_json(c));
  nlohmann::json j{{"type", std::string(1, type_letter(d.type))},
                   {"rank", d.rank},
                   {"p", d.p},
                   {"I", one_based(d.I)},
                   {"lambda", d.lambda},
                   {"module", d.kind},
                   {"dim", r.dim},
                   {"verdict", r.irreducible ? "irreducible" : "reducible"},
                   {"maximal_profile", profile},
                   {"lines_checked", r.lines_checked}};
  if (r.witness) {
    j["witness"] = {{"generated_dim", r.witness->generated_dim},
                    {"weight_mod_p", r.witness->where.weight_mod_p},
                    {"grade", r.witness->where.grade},
                    {"nnz", r.witness->vector.nnz()}};
    j["witness_dims"] = {r.witness->generated_dim};
  } else {
    j["witness_dims"] = nlohmann::json::array();
  }
  return j;
}

nlohmann::json to_json(const CampaignRow& r) {
  nlohmann::json profile = nlohmann::json::array();
  for (const auto& c : r.profile) profile.push_back(to_json(c));
  nlohmann::json j{{"label", r.label},
                   {"source", r.source},
                   {"type", std::string(1, type_letter(r.type))},
                   {"rank", r.rank},
                   {"p", r.p},
                   {"I", one_based(r.I)},
                   {"lambda", r.lambda},
                   {"module", r.baby ? "baby" : "parabolic"},
                   {"expectation", expectation_name(r.expect)},
                   {"dim", r.dim},
                   {"verdict", r.verdict()},
                   {"witness_dim", r.witness_dim},
                   {"lines_checked", r.lines_checked},
                   {"maximal_profile", profile},
                   {"millis", r.millis},
                   {"cap_exceeded", r.cap_exceeded},
                   {"passed", r.passed()}};
  j["expected_dim"] = r.expected_dim ? nlohmann::json(*r.expected_dim) : nlohmann::json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

nlohmann::json to_json(const CampaignReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"campaign", r.name}, {"passed", r.passed()}, {"skipped", r.skipped()},
          {"rows", rows},       {"checks", checks},     {"notes", r.notes}};
}

std::string to_csv(const std::vector<CampaignRow>& rows) {
  std::ostringstream os;
  os << "type,rank,p,I,lambda,dim,verdict,witness_dim,millis\n";
  for (const auto& r : rows) {
    std::string I;
    for (std::size_t k = 0; k < r.I.size(); ++k) I += (k ? "," : "") + std::to_string(r.I[k] + 1);
    os << type_letter(r.type) << ',' << r.rank << ',' << r.p << ',' << csv_field(I) << ','
       << csv_field(format_weight(r.lambda)) << ',' << r.dim << ',' << r.verdict() << ',' << r.witness_dim << ','
       << static_cast<long long>(r.millis + 0.5) << '\n';
  }
  return os.str();
}

void write_campaign(const CampaignReport& r, const std::string& prefix) {
  std::ofstream js(prefix + ".json");
  std::ofstream csv(prefix + ".csv");
  if (!js || !csv) throw std::runtime_error("cannot write report files with prefix " + prefix);
  js << to_json(r).dump(2) << '\n';
  csv << to_csv(r.rows);
}

}  // namespace pbv
