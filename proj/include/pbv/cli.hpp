#pragma once

// Command-line front end. Exit codes: 0 irreducible / passed, 1 reducible / failed,
// 2 invalid input, resource cap or internal error.

#include <iosfwd>
#include <string>
#include <vector>

#include "pbv/config.hpp"

namespace pbv {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_check(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_campaign(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_dump(const CliConfig& c, std::ostream& out, std::ostream& err);
int cmd_selftest(const CliConfig& c, std::ostream& out, std::ostream& err);

}  // namespace pbv
