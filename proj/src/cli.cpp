#include "cmforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cmforge/diophantine.hpp"
#include "cmforge/errors.hpp"
#include "cmforge/field_data.hpp"
#include "cmforge/reciprocity.hpp"

namespace cmforge {

int default_precision() {
  if (const char* env = std::getenv("CMFORGE_PRECISION")) {
    try {
      int p = std::stoi(env);
      if (p >= 50) return p;
    } catch (const std::exception&) {
    }
  }
  return 120;
}

InvariantSpec build_spec(const JobConfig& cfg) {
  ImagQuadField K = make_field(cfg.d);
  RayModulus m = make_modulus(K, cfg.N);
  auto need = [](const std::optional<i64>& v, const char* flag, const char* kind) {
    if (!v) throw DomainError(std::string(kind) + " needs " + flag);
    return *v;
  };
  auto forbid = [](const std::optional<i64>& v, const char* flag, const char* kind) {
    if (v) throw DomainError(std::string(kind) + " does not take " + flag);
  };
  switch (cfg.kind) {
    case InvariantKind::sr_invariant:
      forbid(cfg.p, "-p", "sr_invariant");
      return make_sr_invariant(m, {cfg.s.value_or(0), cfg.t.value_or(1)});
    case InvariantKind::thm51_quotient:
      forbid(cfg.p, "-p", "thm51_quotient");
      return make_thm51_quotient(m, need(cfg.s, "-s", "thm51_quotient"), need(cfg.t, "-t", "thm51_quotient"));
    case InvariantKind::cor52:
      forbid(cfg.s, "-s", "cor52");
      forbid(cfg.t, "-t", "cor52");
      return make_cor52(m, need(cfg.p, "-p", "cor52"));
    case InvariantKind::thm62_real:
      forbid(cfg.p, "-p", "thm62_real");
      if (cfg.s && cfg.t) throw DomainError("thm62_real takes either -s or -t");
      if (cfg.s) return make_thm62_real_i(m, *cfg.s);
      return make_thm62_real_ii(m, need(cfg.t, "-s or -t", "thm62_real"));
    case InvariantKind::cor63:
      forbid(cfg.s, "-s", "cor63");
      forbid(cfg.t, "-t", "cor63");
      return make_cor63(m, need(cfg.p, "-p", "cor63"));
  }
  throw DomainError("unknown invariant kind");
}

std::string describe(const InvariantSpec& spec) {
  std::ostringstream os;
  if (spec.phase != 0) os << "e^{" << spec.phase.get_str() << " pi i} ";
  auto side = [&](const std::vector<std::pair<IndexVector, int>>& v) {
    bool first = true;
    for (const auto& [r, mult] : v) {
      if (!first) os << " ";
      first = false;
      os << "g_" << r.to_string() << "(theta)^" << mult * spec.exponent;
    }
  };
  side(spec.numerator);
  if (!spec.denominator.empty()) {
    os << " / ";
    side(spec.denominator);
  }
  return os.str();
}

namespace {

json form_json(const QuadForm& Q) { return json::array({Q.a, Q.b, Q.c}); }

json matrix_json(const MatModN& m) { return json::array({json::array({m.a(), m.b()}), json::array({m.c(), m.d()})}); }

json bigint_list(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

}  // namespace

json cmd_field(i64 d) {
  ImagQuadField K = make_field(d);
  json forms = json::array();
  for (const auto& Q : K.forms.forms) forms.push_back(form_json(Q));
  std::string theta = K.B_theta == 0 ? "sqrt(" + std::to_string(K.d_K) + ")/2"
                                     : "(-1+sqrt(" + std::to_string(K.d_K) + "))/2";
  return json{{"schema", 1},
              {"command", "field"},
              {"d", K.d},
              {"d_K", K.d_K},
              {"theta", theta},
              {"B_theta", K.B_theta},
              {"C_theta", K.C_theta},
              {"omega_K", K.omega_K},
              {"h_K", K.h_K},
              {"forms", forms}};
}

json cmd_orbit(i64 d, i64 N, std::optional<i64> level) {
  ImagQuadField K = make_field(d);
  RayModulus m = make_modulus(K, N);
  const i64 M = level.value_or(N);
  if (M % N != 0) throw DomainError("level must be a multiple of N");
  WGroup W = build_w_group(K, M);
  json cosets = json::array();
  for (std::size_t i = 0; i < W.coset_reps.size(); ++i) {
    cosets.push_back(json{{"s", W.coset_omegas[i].s}, {"t", W.coset_omegas[i].t}, {"matrix", matrix_json(W.coset_reps[i])}});
  }
  json forms = json::array();
  for (const auto& Q : K.forms.forms) {
    forms.push_back(json{{"form", form_json(Q)}, {"beta", matrix_json(beta_q_matrix(Q, M))}});
  }
  json kernel = json::array();
  for (const auto& k : W.kernel) kernel.push_back(matrix_json(k));
  RayModulus level_mod = make_modulus(K, M);
  return json{{"schema", 1},
              {"command", "orbit"},
              {"d", d},
              {"N", N},
              {"level", M},
              {"kernel", kernel},
              {"coset_count", W.coset_reps.size()},
              {"cosets", cosets},
              {"forms", forms},
              {"orbit_size", W.coset_reps.size() * K.forms.size()},
              {"ray_class_degree", ray_class_degree(level_mod)}};
}

json cmd_minpoly(const JobConfig& cfg) {
  InvariantSpec spec = build_spec(cfg);
  ImagQuadField K = make_field(cfg.d);
  RayModulus m = make_modulus(K, cfg.N);
  const i64 level = cfg.level ? *cfg.level : select_level(spec);
  if (!level_admissible(spec, level)) {
    throw DomainError("level " + std::to_string(level) + " is not admissible for this invariant");
  }
  PrecisionContext ctx{cfg.precision, 20};
  OrbitValues orbit = evaluate_orbit(spec, m, level, ctx, cfg.threads);
  json out{{"schema", 1},
           {"command", "minpoly"},
           {"d", cfg.d},
           {"d_K", K.d_K},
           {"N", cfg.N},
           {"kind", to_string(spec.kind)},
           {"invariant", describe(spec)},
           {"level", level},
           {"precision", cfg.precision},
           {"orbit_size", orbit.values.size()},
           {"field_degree", orbit.declared_field_degree}};
  if (cfg.approx) {
    json coeffs = json::array();
    for (const auto& c : approx_polynomial(orbit)) coeffs.push_back(format_sci(c.re(), 5));
    out["over"] = "K";
    out["degree"] = orbit.values.size();
    out["approx_coefficients"] = coeffs;
    return out;
  }
  Reconstruction rec = reconstruct_polynomial(orbit, ctx);
  mpz_class disc = discriminant(rec.polynomial);
  Factorization fac = factor_integer(disc);
  // A real value has the same minimal polynomial over K and over Q.
  out["over"] = (orbit.include_conjugates || spec.real) ? "Q" : "K";
  out["distinct"] = rec.distinct;
  out["multiplicity"] = rec.multiplicity;
  out["degree"] = rec.polynomial.degree();
  out["coefficients"] = bigint_list(rec.polynomial.descending());
  out["polynomial"] = rec.polynomial.to_string();
  out["discriminant"] = disc.get_str();
  out["discriminant_factored"] = fac.to_string();
  out["discriminant_factorization_complete"] = fac.complete();
  out["unit"] = unit_check(rec.polynomial);
  return out;
}

JobConfig default_dioph_job(i64 n, i64 N, int precision) {
  JobConfig cfg;
  cfg.d = n;
  cfg.N = N;
  cfg.precision = precision;
  for (auto [p, e] : factorize(N)) {
    if (p % 2 == 1 && e >= 2) {
      cfg.kind = InvariantKind::cor63;
      cfg.p = p;
      return cfg;
    }
  }
  cfg.kind = InvariantKind::thm62_real;
  if (N % 2 == 0) {
    cfg.t = 1;
    return cfg;
  }
  // s whose class in (Z/N)^x/{+-1} has odd prime order.
  for (i64 s = 2; s < N; ++s) {
    if (gcd(s, N) != 1) continue;
    i64 k = 1, x = s;
    while (x != 1 && x != N - 1) {
      x = mod(x * s, N);
      ++k;
    }
    if (k % 2 == 1 && is_prime(k)) {
      cfg.s = s;
      return cfg;
    }
  }
  throw DomainError("no real generator available for N=" + std::to_string(N));
}

PolyZ read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::vector<mpz_class> desc;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text);
    for (const auto& c : j.at("coefficients")) desc.emplace_back(c.is_string() ? c.get<std::string>() : c.dump());
  } else {
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) desc.emplace_back(tok);
  }
  return PolyZ::from_descending(desc);
}

json cmd_dioph(i64 n, i64 N, i64 bound, const std::optional<PolyZ>& f, int precision, int threads) {
  if (n < 1 || !is_squarefree(n) || mod(-n, 4) == 1) throw DomainError("n must be square-free with -n = 2,3 mod 4");
  std::string source = "file";
  PolyZ poly;
  if (f) {
    poly = *f;
  } else {
    JobConfig cfg = default_dioph_job(n, N, precision);
    cfg.threads = threads;
    InvariantSpec spec = build_spec(cfg);
    ImagQuadField K = make_field(n);
    RayModulus m = make_modulus(K, N);
    PrecisionContext ctx{precision, 20};
    OrbitValues orbit = evaluate_orbit(spec, m, select_level(spec), ctx, threads);
    poly = reconstruct_polynomial(orbit, ctx).polynomial;
    if (poly.degree() != ray_class_degree(m)) {
      throw DomainError("generated polynomial has degree " + std::to_string(poly.degree()) + ", expected " +
                        std::to_string(ray_class_degree(m)));
    }
    source = describe(spec);
  }
  CrossValidation cv = cross_validate(n, N, poly, bound, threads);
  json mismatches = json::array();
  for (const auto& mm : cv.mismatches) {
    mismatches.push_back(json{{"p", mm.p}, {"criterion", mm.criterion}, {"brute_force", mm.brute_force}});
  }
  return json{{"schema", 1},
              {"command", "dioph"},
              {"n", n},
              {"N", N},
              {"bound", bound},
              {"f_N", bigint_list(poly.descending())},
              {"f_N_source", source},
              {"nN_excluded_primes", cv.nN_excluded_primes},
              {"disc_excluded_primes", cv.disc_excluded_primes},
              {"checked", cv.checked},
              {"representable", cv.representable},
              {"symbol_violations", cv.symbol_violations},
              {"mismatches", mismatches}};
}

namespace {

void render(std::ostream& os, const json& v, const std::string& key, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render(os, x, k, key.empty() ? indent : indent + 2);
  } else if (v.is_array() && !v.empty() && (v.front().is_object())) {
    os << pad << key << ":\n";
    for (const auto& x : v) render(os, x, "-", indent + 2);
  } else {
    os << pad << key << ":";
    if (!v.is_array() || !v.empty()) os << " ";
    if (v.is_string()) {
      os << v.get<std::string>();
    } else if (v.is_array()) {
      if (v.empty()) os << " none";
      bool first = true;
      for (const auto& x : v) {
        if (!first) os << " ";
        first = false;
        os << (x.is_string() ? x.get<std::string>() : x.dump());
      }
    } else {
      os << v.dump();
    }
    os << "\n";
  }
}

}  // namespace

std::string render_text(const json& result) {
  std::ostringstream os;
  render(os, result, "", 0);
  return os.str();
}

}  // namespace cmforge
