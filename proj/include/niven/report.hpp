#ifndef NIVEN_REPORT_HPP
#define NIVEN_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "niven/approx.hpp"
#include "niven/witness.hpp"

namespace niven {

using Json = nlohmann::ordered_json;

/// Top-level machine-readable result of one CLI invocation. Rationals
/// are serialized as exact "num/den" strings, never floats; decimal
/// renderings carry an "_approx" suffix and are display-only.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  Json results;
  std::string precision;                 // fraction string
  std::string status = "ok";             // ok|falsified|indeterminate|error
};

std::string rat_str(const Rational& r);
std::string approx_str(const Rational& r, std::size_t digits = 17);

Json to_json(const Enclosure& e);
Json to_json(const Certificate& c);
Json to_json(const ConvergentRow& row);

Json to_json(const Report& r);
std::string render(const Report& r);  // canonical serialized form

}  // namespace niven

#endif
