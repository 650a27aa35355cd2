#pragma once

#include <map>
#include <string>

#include "fibprod/sequences.hpp"

namespace fibprod {

// Flat key = value configuration. Recognized keys: order, digits, fetch
// (on/off), cache_dir, data_dir, and profile.<name> = "<a> <b>". Anything
// else is an error. Profiles are validated when loaded.
struct RunConfig {
  std::map<std::string, SequenceParams> profiles;
  int default_order = 16;
  int default_digits = 10;
  bool fetch_enabled = false;
  std::string cache_dir = ".fibprod-cache";
  std::string data_dir;

  const SequenceParams& profile(const std::string& name) const;
};

// Built-in profiles (fibonacci, pell, jacobsthal, bronze) and the data
// directory from FIBPROD_DATA_DIR or the compiled-in default.
RunConfig default_config();

// default_config() overlaid with the file's settings.
RunConfig load_config(const std::string& path);

}  // namespace fibprod
