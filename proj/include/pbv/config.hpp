#pragma once

// Plain "key = value" configuration shared by the command line and config files.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbv/rootsys.hpp"

namespace pbv {

struct CliConfig {
  std::string command;  // check, campaign, dump, selftest
  std::string target;   // campaign name or dump kind
  std::string type = "A";
  int rank = 2;
  std::uint32_t p = 5;
  std::vector<int> I;  // 1-based simple-root labels
  std::optional<IntVec> lambda;
  std::optional<IntVec> lambda_rho;
  std::vector<std::int64_t> chi_values;
  std::string policies = "alcove,representatives";
  std::string generator;  // dump action: e.g. h1, x(1,0), y(0,1)
  std::size_t cap = 50000;
  std::size_t line_cap = 100000;
  std::string out;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  bool fallback_order = false;
  bool flipped_signs = false;
  bool skip_hypotheses = false;
  std::string module = "auto";  // check: auto, parabolic or baby

  bool operator==(const CliConfig&) const = default;
};

/// "1,2,3" -> {1,2,3}; empty string -> {}.
std::vector<std::int64_t> parse_int_list(const std::string& s);
std::string join_ints(const std::vector<std::int64_t>& v);
std::string join_ints(const std::vector<int>& v);

/// One "key = value" line per field; blank lines and '#' comments are ignored when parsing.
std::string serialize_config(const CliConfig& c);
CliConfig parse_config(const std::string& text);
CliConfig load_config(const std::string& path);

/// lambda from either lambda or lambda + rho; throws if neither or both are set or the rank is wrong.
Weight resolve_lambda(const CliConfig& c);
/// 1-based labels to 0-based indices, range-checked against the rank.
std::vector<int> resolve_I(const CliConfig& c);

}  // namespace pbv
