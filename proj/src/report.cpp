#include "niven/report.hpp"

namespace niven {

std::string rat_str(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str()
                          : r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string approx_str(const Rational& r, std::size_t digits) {
  return decimal_string(r, digits);
}

Json to_json(const Enclosure& e) {
  Json j;
  j["lo"] = rat_str(e.lo());
  j["hi"] = rat_str(e.hi());
  j["lo_approx"] = approx_str(e.lo());
  j["hi_approx"] = approx_str(e.hi());
  j["width"] = rat_str(e.width());
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = c.kind;
  j["candidate"] = rat_str(c.candidate);
  if (c.n) j["n"] = *c.n;
  j["integer_side"] = c.integer_side.get_str();
  j["enclosed_side"] = to_json(c.enclosed_side);
  j["bound"] = rat_str(c.bound);
  j["verdict"] = to_string(c.verdict);
  j["precision"] = rat_str(c.precision);
  return j;
}

Json to_json(const ConvergentRow& row) {
  Json j;
  j["n"] = row.n;
  j["degenerate"] = row.degenerate;
  if (!row.degenerate) {
    j["approximant"] = rat_str(row.approximant);
    j["approximant_approx"] = approx_str(row.approximant);
    j["error"] = to_json(row.error);
    j["bound"] = rat_str(row.bound);
  }
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  Json in = Json::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  j["inputs"] = std::move(in);
  j["results"] = r.results;
  j["precision"] = r.precision;
  j["status"] = r.status;
  return j;
}

std::string render(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace niven
