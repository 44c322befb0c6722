#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cmforge/cli.hpp"
#include "cmforge/diophantine.hpp"
#include "cmforge/errors.hpp"

using namespace cmforge;

int main(int argc, char** argv) {
  CLI::App app{"cmforge: ray class invariants over imaginary quadratic fields"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  int threads = 1;
  int precision = default_precision();
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write output to FILE");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("-P,--precision", precision, "decimal digits (env CMFORGE_PRECISION)")->check(CLI::Range(50, 100000));

  i64 field_d = 0;
  auto* field = app.add_subcommand("field", "field data and reduced forms");
  field->add_option("d", field_d)->required();

  i64 orbit_d = 0, orbit_N = 0;
  std::optional<i64> orbit_level;
  auto* orbit = app.add_subcommand("orbit", "coset representatives of W mod kernel");
  orbit->add_option("d", orbit_d)->required();
  orbit->add_option("N", orbit_N)->required();
  orbit->add_option("--level", orbit_level);

  JobConfig cfg;
  std::string kind;
  auto* minpoly = app.add_subcommand("minpoly", "exact minimal polynomial of an invariant");
  minpoly->add_option("-d", cfg.d)->required();
  minpoly->add_option("-N", cfg.N)->required();
  minpoly->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"sr_invariant", "thm51_quotient", "cor52", "thm62_real", "cor63"}));
  minpoly->add_option("-s", cfg.s);
  minpoly->add_option("-t", cfg.t);
  minpoly->add_option("-p", cfg.p);
  minpoly->add_option("--level", cfg.level);
  minpoly->add_flag("--approx", cfg.approx, "approximate coefficients of the orbit product only");

  i64 dn = 0, dN = 0, bound = 0;
  std::string poly_file;
  auto* dioph = app.add_subcommand("dioph", "cross-validate the representability criterion");
  dioph->add_option("n", dn)->required();
  dioph->add_option("N", dN)->required();
  dioph->add_option("bound", bound)->required();
  dioph->add_option("--minpoly-file", poly_file);

  // Subcommand-local copies of the global flags.
  for (auto* sub : {field, orbit, minpoly, dioph}) {
    sub->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path);
    sub->add_option("--threads", threads)->check(CLI::PositiveNumber);
    sub->add_option("-P,--precision", precision)->check(CLI::Range(50, 100000));
  }

  CLI11_PARSE(app, argc, argv);

  json result;
  int code = 0;
  try {
    if (*field) {
      result = cmd_field(field_d);
    } else if (*orbit) {
      result = cmd_orbit(orbit_d, orbit_N, orbit_level);
    } else if (*minpoly) {
      cfg.kind = parse_kind(kind);
      cfg.precision = precision;
      cfg.threads = threads;
      result = cmd_minpoly(cfg);
    } else if (*dioph) {
      std::optional<PolyZ> f;
      if (!poly_file.empty()) f = read_polynomial_file(poly_file);
      result = cmd_dioph(dn, dN, bound, f, precision, threads);
      if (!result["mismatches"].empty()) code = 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string text = format == "json" ? result.dump(2) + "\n" : render_text(result);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out_path) << text;
  }
  return code;
}
