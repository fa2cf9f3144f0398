#pragma once

// JSON and CSV serialisation of irreducibility reports and campaign reports.

#include <string>
#include <vector>

#include "json.hpp"
#include "pbv/campaigns.hpp"
#include "pbv/verma.hpp"

namespace pbv {

struct ModuleDescriptor {
  RootType type = RootType::A;
  int rank = 0;
  std::uint32_t p = 0;
  std::vector<int> I;  // 0-based
  Weight lambda;
  std::string kind;  // "parabolic" or "baby"
};

nlohmann::json to_json(const ComponentProfile& c);
nlohmann::json to_json(const ModuleDescriptor& d, const IrreducibilityReport& r);
nlohmann::json to_json(const CampaignRow& r);
nlohmann::json to_json(const CampaignReport& r);

/// Columns: type, rank, p, I, lambda, dim, verdict, witness_dim, millis.
std::string to_csv(const std::vector<CampaignRow>& rows);

/// Writes <prefix>.json and <prefix>.csv.
void write_campaign(const CampaignReport& r, const std::string& prefix);

}  // namespace pbv
