#pragma once

#include <complex>
#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace testsup {

using cplx = std::complex<double>;

#ifndef EULERLAB_GOLDEN_FILE
#define EULERLAB_GOLDEN_FILE "tests/golden/reference_values.json"
#endif

inline const nlohmann::json& golden_doc() {
  static const nlohmann::json doc = [] {
    std::ifstream f(EULERLAB_GOLDEN_FILE);
    if (!f) throw std::runtime_error("cannot open golden file " EULERLAB_GOLDEN_FILE);
    nlohmann::json j;
    f >> j;
    return j;
  }();
  return doc;
}

struct golden_value {
  cplx value;
  double uncertainty;
};

/// Entry lookup by name and exact input match (the test literals are the
/// same doubles the generator used).
inline golden_value golden(const std::string& name,
                           const std::map<std::string, cplx>& inputs) {
  for (const auto& entry : golden_doc()["entries"]) {
    if (entry["name"] != name) continue;
    bool match = true;
    for (const auto& [key, want] : inputs) {
      if (!entry["inputs"].contains(key)) {
        match = false;
        break;
      }
      const auto& got = entry["inputs"][key];
      if (got["re"].get<double>() != want.real() || got["im"].get<double>() != want.imag()) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    return {cplx(entry["value"]["re"].get<double>(), entry["value"]["im"].get<double>()),
            entry["uncertainty"].get<double>()};
  }
  throw std::runtime_error("no golden entry for " + name);
}

inline golden_value golden_at(const std::string& name, cplx s) {
  return golden(name, {{"s", s}});
}

}  // namespace testsup
