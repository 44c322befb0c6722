#include "cmforge/siegel.hpp"

#include <cmath>
#include <numeric>

#include "cmforge/errors.hpp"

namespace cmforge {

mpfr_prec_t PrecisionContext::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil((digits + guard) * std::log2(10.0)));
}

void PrecisionContext::validate() const {
  if (digits < 50) throw DomainError("precision must be at least 50 digits");
  if (guard < 0) throw DomainError("guard digits must be non-negative");
}

IndexVector::IndexVector(mpq_class a, mpq_class b) : r1(std::move(a)), r2(std::move(b)) {
  r1.canonicalize();
  r2.canonicalize();
}

i64 IndexVector::level() const {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), r1.get_den_mpz_t(), r2.get_den_mpz_t());
  return l.get_si();
}

bool IndexVector::integral() const { return r1.get_den() == 1 && r2.get_den() == 1; }

std::string IndexVector::to_string() const { return "(" + r1.get_str() + "," + r2.get_str() + ")"; }

std::string to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::sr_invariant:
      return "sr_invariant";
    case InvariantKind::thm51_quotient:
      return "thm51_quotient";
    case InvariantKind::cor52:
      return "cor52";
    case InvariantKind::thm62_real:
      return "thm62_real";
    case InvariantKind::cor63:
      return "cor63";
  }
  return "?";
}

InvariantKind parse_kind(const std::string& s) {
  for (auto k : {InvariantKind::sr_invariant, InvariantKind::thm51_quotient, InvariantKind::cor52,
                 InvariantKind::thm62_real, InvariantKind::cor63}) {
    if (to_string(k) == s) return k;
  }
  throw DomainError("unknown invariant kind '" + s + "'");
}

Family InvariantSpec::family() const {
  Family f;
  for (const auto& [r, mult] : numerator) f.emplace_back(r, mult * exponent);
  for (const auto& [r, mult] : denominator) f.emplace_back(r, -mult * exponent);
  return f;
}

mpq_class bernoulli2(const mpq_class& x) {
  mpq_class out = x * x - x + mpq_class(1, 6);
  out.canonicalize();
  return out;
}

mpq_class frac(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class out = x - fl;
  out.canonicalize();
  return out;
}

IndexVector fractional_reduce(const IndexVector& r) {
  if (r.integral()) throw DomainError("Siegel index " + r.to_string() + " is integral");
  return {frac(r.r1), frac(r.r2)};
}

ReducedIndex reduce_with_phase(const IndexVector& r) {
  IndexVector a = fractional_reduce(r);
  mpq_class b1 = r.r1 - a.r1;
  mpq_class b2 = r.r2 - a.r2;
  // g_{a+b} = (-1)^{b1 b2 + b1 + b2} e^{-pi i (b1 a2 - b2 a1)} g_a
  mpq_class phase = b1 * b2 + b1 + b2 - (b1 * a.r2 - b2 * a.r1);
  phase.canonicalize();
  return {a, phase};
}

mp::Complex tau_of_form(const QuadForm& Q, mpfr_prec_t prec) {
  QuadIrrational th = theta_of_form(Q);
  mp::Real q(prec, th.q);
  mp::Real re = mp::Real(prec, th.p) / q;
  mp::Real im = mp::sqrt(mp::Real(prec, -th.D)) / q;
  return {re, im};
}

SiegelValue siegel_core(const IndexVector& reduced, const mp::Complex& tau, const PrecisionContext& ctx) {
  if (reduced.integral()) throw DomainError("Siegel index " + reduced.to_string() + " is integral");
  if (tau.im().sign() <= 0) throw DomainError("tau must lie in the upper half-plane");
  const mpfr_prec_t prec = ctx.bits();
  const mp::Real two_pi = mp::pi(prec) * mp::Real(prec, 2L);
  const mp::Complex i_two_pi(mp::Real(prec, 0L), two_pi);

  mp::Complex q = mp::exp(i_two_pi * tau);
  mp::Complex z(tau.re() * mp::Real(prec, reduced.r1) + mp::Real(prec, reduced.r2), tau.im() * mp::Real(prec, reduced.r1));
  mp::Complex qz = mp::exp(i_two_pi * z);
  mp::Complex qz_inv = mp::one(prec) / qz;

  // q^{B2(r1)/2} = e^{pi i tau B2(r1)}
  mp::Complex half_exp(mp::Real(prec, 0L), mp::pi(prec) * mp::Real(prec, bernoulli2(reduced.r1)));
  mp::Complex value = -(mp::exp(half_exp * tau) * (mp::one(prec) - qz));

  const double y = tau.im().to_double();
  const double r1 = reduced.r1.get_d();
  const int n_max =
      static_cast<int>(std::ceil(r1 + (ctx.digits + ctx.guard) * std::log(10.0) / (2 * M_PI * y))) + 1;
  mp::Complex qn = q;
  for (int n = 1; n <= n_max; ++n) {
    value *= (mp::one(prec) - qn * qz) * (mp::one(prec) - qn * qz_inv);
    qn *= q;
  }
  return {std::move(value), ctx, n_max};
}

SiegelValue siegel_eval(const IndexVector& r, const mp::Complex& tau, const PrecisionContext& ctx) {
  ReducedIndex red = reduce_with_phase(r);
  SiegelValue core = siegel_core(red.reduced, tau, ctx);
  mpq_class total = red.phase + red.reduced.r2 * (red.reduced.r1 - 1);
  core.value = core.value * mp::exp_i_pi(ctx.bits(), total);
  return core;
}

SiegelValue evaluate_family(const Family& family, const mpq_class& phase, const mp::Complex& tau,
                            const PrecisionContext& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  mp::Complex value = mp::one(prec);
  mpq_class total = phase;
  int terms = 0;
  for (const auto& [r, mult] : family) {
    ReducedIndex red = reduce_with_phase(r);
    SiegelValue core = siegel_core(red.reduced, tau, ctx);
    terms = std::max(terms, core.truncation_terms);
    total += mult * (red.phase + red.reduced.r2 * (red.reduced.r1 - 1));
    value *= mp::pow(core.value, mult);
  }
  value *= mp::exp_i_pi(prec, total);
  return {std::move(value), ctx, terms};
}

bool modularity_check(const Family& family, i64 N) {
  mpz_class s11 = 0, s22 = 0, s12 = 0, weight = 0;
  for (const auto& [r, mult] : family) {
    mpq_class x = r.r1 * N, y = r.r2 * N;
    x.canonicalize();
    y.canonicalize();
    if (x.get_den() != 1 || y.get_den() != 1) {
      throw DomainError("index " + r.to_string() + " has denominator not dividing " + std::to_string(N));
    }
    mpz_class a = x.get_num(), b = y.get_num();
    s11 += mult * a * a;
    s22 += mult * b * b;
    s12 += mult * a * b;
    weight += mult;
  }
  const i64 quad_mod = gcd(2, N) * N;
  auto divides = [](const mpz_class& v, i64 m) { return mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(m)) != 0; };
  return divides(s11, quad_mod) && divides(s22, quad_mod) && divides(s12, N) && divides(weight * gcd(12, N), 12);
}

SiegelValue invariant_value(const InvariantSpec& spec, const PrecisionContext& ctx) {
  ctx.validate();
  return evaluate_family(spec.family(), spec.phase, tau_of_form(spec.point, ctx.bits()), ctx);
}

SiegelValue sr_invariant(const RayModulus& m, const AlgebraicIntegerZTheta& omega, const PrecisionContext& ctx) {
  return invariant_value(make_sr_invariant(m, omega), ctx);
}

int m_exponent_theorem51(i64 N) {
  if (N < 2) throw DomainError("N must be at least 2");
  return static_cast<int>(N % 2 == 1 ? gcd(N, 3) : 4 * gcd(N / 2, 3));
}

int m_exponent_theorem62(i64 N, i64 s) {
  if (gcd(s, N) != 1) throw DomainError("s must be prime to N");
  const i64 modulus = gcd(2, N) * N;
  for (i64 m = 1; m <= N; ++m) {
    if (N % m != 0 || mod(m - N, 2) != 0) continue;
    __int128 v = static_cast<__int128>(m) * (static_cast<__int128>(s) * s - 1);
    if (v % modulus == 0) return static_cast<int>(m);
  }
  return static_cast<int>(N);
}

namespace {

QuadForm principal_form(const ImagQuadField& K) { return K.forms.forms.front(); }

InvariantSpec base_spec(const RayModulus& m, InvariantKind kind) {
  InvariantSpec spec;
  spec.kind = kind;
  spec.point = principal_form(m.field);
  spec.conductor = m.N;
  return spec;
}

IndexVector idx(i64 a, i64 b, i64 N) { return {mpq_class(a, N), mpq_class(b, N)}; }

}  // namespace

InvariantSpec make_sr_invariant(const RayModulus& m, const AlgebraicIntegerZTheta& omega) {
  if (gcd(norm(m.field, omega), m.N) != 1) throw DomainError("omega is not prime to N");
  InvariantSpec spec = base_spec(m, InvariantKind::sr_invariant);
  spec.numerator.emplace_back(idx(omega.s, omega.t, m.N), 1);
  spec.exponent = static_cast<int>(12 * m.N);
  spec.label = "g_" + idx(omega.s, omega.t, m.N).to_string() + "^" + std::to_string(12 * m.N);
  return spec;
}

InvariantSpec make_thm51_quotient(const RayModulus& m, i64 s, i64 t) {
  if (gcd(norm(m.field, {s, t}), m.N) != 1) throw DomainError("s*theta + t is not prime to N");
  InvariantSpec spec = base_spec(m, InvariantKind::thm51_quotient);
  spec.numerator.emplace_back(idx(s, t, m.N), 1);
  spec.denominator.emplace_back(idx(0, 1, m.N), 1);
  spec.exponent = m_exponent_theorem51(m.N);
  return spec;
}

InvariantSpec make_cor52(const RayModulus& m, i64 p) {
  AlgebraicIntegerZTheta beta = beta_of_lemma(m, p);
  InvariantSpec spec = base_spec(m, InvariantKind::cor52);
  spec.numerator.emplace_back(idx(beta.s, beta.t, m.N), 1);
  spec.denominator.emplace_back(idx(0, 1, m.N), 1);
  spec.exponent = p == 3 ? 3 : 1;
  return spec;
}

InvariantSpec make_thm62_real_i(const RayModulus& m, i64 s) {
  if (gcd(s, m.N) != 1) throw DomainError("s must be prime to N");
  InvariantSpec spec = base_spec(m, InvariantKind::thm62_real);
  spec.numerator.emplace_back(idx(0, s, m.N), 1);
  spec.denominator.emplace_back(idx(0, 1, m.N), 1);
  spec.exponent = m_exponent_theorem62(m.N, s);
  spec.real = true;
  return spec;
}

InvariantSpec make_thm62_real_ii(const RayModulus& m, i64 t) {
  const i64 N = m.N;
  if (N % 2 != 0) throw DomainError("the second real invariant needs N even");
  if (mod(static_cast<i64>((static_cast<__int128>(t) * t) % N) - 1, N) != 0) throw DomainError("t^2 must be 1 mod N");
  if ((N * m.field.d) % 4 != 0) throw DomainError("the second real invariant needs 4 | N n");
  if (mod(m.field.d_K, 4) != 0) throw DomainError("the second real invariant needs -n = 2,3 mod 4");
  InvariantSpec spec = base_spec(m, InvariantKind::thm62_real);
  spec.numerator.emplace_back(IndexVector(mpq_class(1, 2), mpq_class(t, N)), 1);
  spec.denominator.emplace_back(idx(0, 1, N), 1);
  if (N % 4 == 0) {
    spec.exponent = 2;
    spec.phase = mpq_class(t, N);
  } else {
    spec.exponent = 4;
    spec.phase = mpq_class(2 * t, N);
  }
  spec.phase.canonicalize();
  spec.real = true;
  return spec;
}

InvariantSpec make_cor63(const RayModulus& m, i64 p) {
  const i64 N = m.N;
  if (!is_prime(p) || p % 2 == 0 || N % (p * p) != 0) throw DomainError("cor63 needs an odd prime p with p^2 | N");
  InvariantSpec spec = base_spec(m, InvariantKind::cor63);
  spec.numerator.emplace_back(idx(0, N / p + 1, N), 1);
  spec.denominator.emplace_back(idx(0, 1, N), 1);
  spec.exponent = static_cast<int>(N % 2 == 1 ? p : 2 * p);
  spec.real = true;
  return spec;
}

}  // namespace cmforge
