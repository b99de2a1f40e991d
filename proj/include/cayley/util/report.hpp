#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

// A check that cannot run on this input (not pseudoholomorphic, I1 identically
// zero, ...). Carries the reason shown to the user.
struct Refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input spec; `pointer` is a JSON pointer to the offending field.
struct SpecError : std::runtime_error {
  std::string pointer;
  SpecError(std::string ptr, const std::string& what) : std::runtime_error(what), pointer(std::move(ptr)) {}
};

struct CheckStats {
  std::string name;
  std::string anchor;
  double sup = 0;
  double mean = 0;
  int samples = 0;
  int excluded = 0;
  double tol = 0;
  bool pass = false;
  std::string note;

  // Fills sup/mean/samples and the verdict sup < tol.
  void accumulate(const std::vector<double>& values, double tolerance) {
    tol = tolerance;
    sup = 0;
    mean = 0;
    samples = static_cast<int>(values.size());
    for (double v : values) {
      sup = std::max(sup, v);
      mean += v;
    }
    if (samples) mean /= samples;
    pass = samples > 0 && sup < tol;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"name", name}, {"sup", sup},   {"mean", mean},
                        {"samples", samples}, {"tol", tol}, {"verdict", pass ? "pass" : "fail"}};
    if (!anchor.empty()) j["anchor"] = anchor;
    if (excluded) j["excluded"] = excluded;
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

}  // namespace cayley
