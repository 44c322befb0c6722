#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cmforge/minpoly.hpp"
#include "cmforge/siegel.hpp"

namespace cmforge {

using json = nlohmann::ordered_json;

struct JobConfig {
  i64 d = 0;
  i64 N = 0;
  InvariantKind kind = InvariantKind::sr_invariant;
  std::optional<i64> s;
  std::optional<i64> t;
  std::optional<i64> p;
  int precision = 120;
  std::optional<i64> level;
  int threads = 1;
  std::string format = "json";
  bool approx = false;
};

// CMFORGE_PRECISION if set and valid, else 120.
int default_precision();

InvariantSpec build_spec(const JobConfig& cfg);
std::string describe(const InvariantSpec& spec);

json cmd_field(i64 d);
json cmd_orbit(i64 d, i64 N, std::optional<i64> level);
json cmd_minpoly(const JobConfig& cfg);
json cmd_dioph(i64 n, i64 N, i64 bound, const std::optional<PolyZ>& f, int precision, int threads);

// The real generator used when dioph is run without a polynomial file.
JobConfig default_dioph_job(i64 n, i64 N, int precision);
PolyZ read_polynomial_file(const std::string& path);

std::string render_text(const json& result);

}  // namespace cmforge
