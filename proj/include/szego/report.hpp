#ifndef SZEGO_REPORT_HPP
#define SZEGO_REPORT_HPP

#include <complex>
#include <map>
#include <string>

#include <json.hpp>

#include "szego/gaussian_moments.hpp"
#include "szego/rational.hpp"

namespace szego {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, experimental };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::experimental:
      return "EXPERIMENTAL";
  }
  return "FAIL";
}

/// Versioned machine-readable result of one CLI command.
struct Report {
  std::string command;
  Json params = Json::object();
  Json results = Json::object();
  Status status = Status::pass;
  Json diagnostics = Json::object();

  Json to_json() const {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["params"] = params;
    j["results"] = results;
    j["status"] = status_name(status);
    j["diagnostics"] = diagnostics;
    return j;
  }

  /// 0 for PASS and EXPERIMENTAL, 1 for FAIL.
  int exit_code() const { return status == Status::fail ? 1 : 0; }
};

inline Json to_json(const Rat& r) { return r.to_string(); }

inline Json to_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

inline Json to_json(const MomentPolynomial& p) {
  Json j = Json::object();
  const auto m = p.to_map();
  for (auto it = m.rbegin(); it != m.rend(); ++it) j[std::to_string(it->first)] = it->second.to_string();
  return j;
}

inline Json to_json(const BetaPoly& p) {
  Json j = Json::object();
  const auto m = p.to_map();
  for (auto it = m.rbegin(); it != m.rend(); ++it) j[std::to_string(it->first)] = it->second.to_string();
  return j;
}

inline Json to_json(const RatFuncBeta& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

}  // namespace szego

#endif  // SZEGO_REPORT_HPP
