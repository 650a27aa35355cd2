#pragma once

#include <stdexcept>
#include <string>

namespace fibprod {

// Error categories. The CLI maps these onto its exit-code contract
// (usage/config -> 2, environment -> 3); library callers can branch on them.
enum class errc {
  domain,          // argument outside the supported domain
  constraint,      // violated relation between arguments (e.g. p+q != c+d)
  valuation,       // series has the wrong valuation for the operation
  cancellation,    // irrational components failed to cancel
  divergence,      // evaluation point outside the certified disk
  inconclusive,    // certification budget exhausted without a verdict
  derived_params,  // derived sequence parameters violate invariants
  parse,           // malformed input text
  config,          // bad configuration file or profile
  environment,     // missing fixture, fetch disabled, ...
  precision,       // requested accuracy not reachable from the inputs
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace fibprod
