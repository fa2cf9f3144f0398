#include "pbv/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pbv {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::invalid_argument("expected true or false, got '" + v + "'");
}

std::uint64_t parse_unsigned(const std::string& v) {
  std::size_t used = 0;
  const auto x = std::stoull(v, &used);
  if (used != v.size()) throw std::invalid_argument("expected an unsigned integer, got '" + v + "'");
  return x;
}

std::optional<IntVec> parse_optional_list(const std::string& v) {
  if (v == "none") return std::nullopt;
  return parse_int_list(v);
}

std::string format_optional_list(const std::optional<IntVec>& v) { return v ? join_ints(*v) : "none"; }

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  const std::string t = trim(s);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    const auto x = std::stoll(item, &used);
    if (used != item.size() || item.empty()) throw std::invalid_argument("bad integer '" + item + "' in list '" + s + "'");
    out.push_back(x);
  }
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

std::string join_ints(const std::vector<int>& v) { return join_ints(std::vector<std::int64_t>(v.begin(), v.end())); }

std::string serialize_config(const CliConfig& c) {
  std::ostringstream os;
  os << "command = " << c.command << "\n"
     << "target = " << c.target << "\n"
     << "type = " << c.type << "\n"
     << "rank = " << c.rank << "\n"
     << "p = " << c.p << "\n"
     << "I = " << join_ints(c.I) << "\n"
     << "lambda = " << format_optional_list(c.lambda) << "\n"
     << "lambda_rho = " << format_optional_list(c.lambda_rho) << "\n"
     << "chi_values = " << join_ints(c.chi_values) << "\n"
     << "policies = " << c.policies << "\n"
     << "generator = " << c.generator << "\n"
     << "cap = " << c.cap << "\n"
     << "line_cap = " << c.line_cap << "\n"
     << "out = " << c.out << "\n"
     << "workers = " << c.workers << "\n"
     << "seed = " << c.seed << "\n"
     << "fallback_order = " << (c.fallback_order ? "true" : "false") << "\n"
     << "flipped_signs = " << (c.flipped_signs ? "true" : "false") << "\n"
     << "skip_hypotheses = " << (c.skip_hypotheses ? "true" : "false") << "\n"
     << "module = " << c.module << "\n";
  return os.str();
}

CliConfig parse_config(const std::string& text) {
  CliConfig c;
  const std::map<std::string, std::function<void(const std::string&)>> setters{
      {"command", [&](const std::string& v) { c.command = v; }},
      {"target", [&](const std::string& v) { c.target = v; }},
      {"type", [&](const std::string& v) { c.type = v; }},
      {"rank", [&](const std::string& v) { c.rank = static_cast<int>(parse_unsigned(v)); }},
      {"p", [&](const std::string& v) { c.p = static_cast<std::uint32_t>(parse_unsigned(v)); }},
      {"I",
       [&](const std::string& v) {
         c.I.clear();
         for (auto x : parse_int_list(v)) c.I.push_back(static_cast<int>(x));
       }},
      {"lambda", [&](const std::string& v) { c.lambda = parse_optional_list(v); }},
      {"lambda_rho", [&](const std::string& v) { c.lambda_rho = parse_optional_list(v); }},
      {"chi_values", [&](const std::string& v) { c.chi_values = parse_int_list(v); }},
      {"policies", [&](const std::string& v) { c.policies = v; }},
      {"generator", [&](const std::string& v) { c.generator = v; }},
      {"cap", [&](const std::string& v) { c.cap = parse_unsigned(v); }},
      {"line_cap", [&](const std::string& v) { c.line_cap = parse_unsigned(v); }},
      {"out", [&](const std::string& v) { c.out = v; }},
      {"workers", [&](const std::string& v) { c.workers = static_cast<unsigned>(parse_unsigned(v)); }},
      {"seed", [&](const std::string& v) { c.seed = parse_unsigned(v); }},
      {"fallback_order", [&](const std::string& v) { c.fallback_order = parse_bool(v); }},
      {"flipped_signs", [&](const std::string& v) { c.flipped_signs = parse_bool(v); }},
      {"skip_hypotheses", [&](const std::string& v) { c.skip_hypotheses = parse_bool(v); }},
      {"module", [&](const std::string& v) { c.module = v; }},
  };
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const auto it = setters.find(key);
    if (it == setters.end()) throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    it->second(trim(t.substr(eq + 1)));
  }
  return c;
}

CliConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Weight resolve_lambda(const CliConfig& c) {
  if (c.lambda && c.lambda_rho) throw std::invalid_argument("give either lambda or lambda+rho, not both");
  if (!c.lambda && !c.lambda_rho) throw std::invalid_argument("a weight is required (lambda or lambda+rho)");
  Weight w = c.lambda ? *c.lambda : *c.lambda_rho;
  if (w.size() != static_cast<std::size_t>(c.rank))
    throw std::invalid_argument("weight has " + std::to_string(w.size()) + " coordinates, rank is " + std::to_string(c.rank));
  if (c.lambda_rho)
    for (auto& x : w) x -= 1;
  return w;
}

std::vector<int> resolve_I(const CliConfig& c) {
  std::vector<int> out;
  for (int i : c.I) {
    if (i < 1 || i > c.rank) throw std::invalid_argument("simple root label " + std::to_string(i) + " out of range 1.." + std::to_string(c.rank));
    out.push_back(i - 1);
  }
  return out;
}

}  // namespace pbv
