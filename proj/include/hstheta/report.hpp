// Copyright 2026 the hstheta authors
#ifndef HSTHETA_REPORT_HPP
#define HSTHETA_REPORT_HPP

#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

namespace hstheta {

inline constexpr const char* kToolVersion = "0.1.0";

// One JSON object per invocation; numbers are exact integers, polynomials and
// matrices appear in the canonical text serialization. Text mode renders the
// same data for humans. With --deterministic the timing field is omitted and
// byte-identical inputs produce byte-identical reports.
struct Report {
  std::string command;
  std::string ring_fingerprint;
  uint64_t seed = 0;
  nlohmann::json flags = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::array();
  std::string verdict = "PASS";
  std::optional<int64_t> timing_ms;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["version"] = kToolVersion;
    j["ring"] = ring_fingerprint;
    j["seed"] = seed;
    j["flags"] = flags;
    j["results"] = results;
    j["verdict"] = verdict;
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "hstheta " << kToolVersion << " :: " << command << "\n";
    if (!ring_fingerprint.empty()) os << "ring " << ring_fingerprint << "\n";
    for (const auto& r : results) {
      if (r.is_object() && r.contains("op")) {
        os << "  " << r["op"].get<std::string>() << ":";
        for (auto it = r.begin(); it != r.end(); ++it) {
          if (it.key() == "op") continue;
          os << " " << it.key() << "=" << it.value().dump();
        }
        os << "\n";
      } else {
        os << "  " << r.dump() << "\n";
      }
    }
    os << "verdict: " << verdict << "\n";
    if (timing_ms) os << "timing_ms: " << *timing_ms << "\n";
    return os.str();
  }
};

}  // namespace hstheta

#endif
