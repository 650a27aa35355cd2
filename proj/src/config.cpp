#include "fibprod/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fibprod {

#ifndef FIBPROD_DEFAULT_DATA_DIR
#define FIBPROD_DEFAULT_DATA_DIR "data/bfiles"
#endif

const SequenceParams& RunConfig::profile(const std::string& name) const {
  auto it = profiles.find(name);
  if (it == profiles.end()) fail(errc::config, "unknown profile '" + name + "'");
  return it->second;
}

RunConfig default_config() {
  RunConfig cfg;
  cfg.profiles.emplace("fibonacci", SequenceParams(Rational(1), Rational(1)));
  cfg.profiles.emplace("pell", SequenceParams(Rational(2), Rational(1)));
  cfg.profiles.emplace("jacobsthal", SequenceParams(Rational(1), Rational(2)));
  cfg.profiles.emplace("bronze", SequenceParams(Rational(3), Rational(1)));
  if (const char* env = std::getenv("FIBPROD_DATA_DIR"))
    cfg.data_dir = env;
  else
    cfg.data_dir = FIBPROD_DEFAULT_DATA_DIR;
  return cfg;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int parse_positive_int(const std::string& value, const std::string& key) {
  try {
    size_t pos = 0;
    int v = std::stoi(value, &pos);
    if (pos != value.size() || v < 1) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail(errc::config, "key '" + key + "' needs a positive integer, got '" + value + "'");
  }
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::environment, "cannot open config file '" + path + "'");
  RunConfig cfg = default_config();
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    auto eq = body.find('=');
    auto where = [&] { return path + ":" + std::to_string(line_no); };
    if (eq == std::string::npos) fail(errc::config, where() + ": expected 'key = value'");
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (key.empty() || value.empty()) fail(errc::config, where() + ": empty key or value");
    if (key == "order") {
      cfg.default_order = parse_positive_int(value, key);
    } else if (key == "digits") {
      cfg.default_digits = parse_positive_int(value, key);
    } else if (key == "fetch") {
      if (value == "on")
        cfg.fetch_enabled = true;
      else if (value == "off")
        cfg.fetch_enabled = false;
      else
        fail(errc::config, where() + ": fetch must be 'on' or 'off'");
    } else if (key == "cache_dir") {
      cfg.cache_dir = value;
    } else if (key == "data_dir") {
      cfg.data_dir = value;
    } else if (key.rfind("profile.", 0) == 0) {
      std::string name = key.substr(8);
      if (name.empty()) fail(errc::config, where() + ": profile needs a name");
      std::istringstream vs(value);
      std::string a_tok, b_tok, extra;
      vs >> a_tok >> b_tok;
      if (b_tok.empty() || (vs >> extra))
        fail(errc::config, where() + ": profile value must be '<a> <b>'");
      try {
        SequenceParams params(parse_rational(a_tok), parse_rational(b_tok));
        cfg.profiles.insert_or_assign(name, params);
      } catch (const error& e) {
        fail(errc::config, where() + ": " + e.what());
      }
    } else {
      fail(errc::config, where() + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

}  // namespace fibprod
