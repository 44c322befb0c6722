#include "cmforge/reciprocity.hpp"

#include <numeric>

#include "cmforge/errors.hpp"

namespace cmforge {

MatModN w_matrix(const ImagQuadField& K, const AlgebraicIntegerZTheta& omega, i64 N) {
  const i64 s = mod(omega.s, N), t = mod(omega.t, N);
  return {N, t - mod(K.B_theta * s, N), -mod(static_cast<i64>((static_cast<__int128>(K.C_theta) * s) % N), N), s, t};
}

WGroup build_w_group(const ImagQuadField& K, i64 N) {
  if (N < 2) throw DomainError("N must be at least 2");
  WGroup W;
  W.N = N;
  const auto us = units(K);
  for (const auto& u : us) W.kernel.push_back(w_matrix(K, u, N));
  std::sort(W.kernel.begin(), W.kernel.end());
  W.kernel.erase(std::unique(W.kernel.begin(), W.kernel.end()), W.kernel.end());
  std::vector<char> seen(static_cast<std::size_t>(N * N), 0);
  for (i64 s = 0; s < N; ++s) {
    for (i64 t = 0; t < N; ++t) {
      MatModN w = w_matrix(K, {s, t}, N);
      if (!w.invertible()) continue;
      W.elements.push_back(w);
      if (seen[static_cast<std::size_t>(s * N + t)]) continue;
      W.coset_reps.push_back(w);
      W.coset_omegas.push_back({s, t});
      for (const auto& u : us) {
        AlgebraicIntegerZTheta x = multiply(K, {s, t}, u);
        seen[static_cast<std::size_t>(mod(x.s, N) * N + mod(x.t, N))] = 1;
      }
    }
  }
  return W;
}

MatModN principal_class_matrix(const ImagQuadField& K, const AlgebraicIntegerZTheta& omega, i64 N) {
  if (gcd(norm(K, omega), N) != 1) throw DomainError("omega is not prime to N");
  return w_matrix(K, omega, N);
}

i64 ray_class_order(const AlgebraicIntegerZTheta& omega, const RayModulus& m) {
  const MatModN alpha = principal_class_matrix(m.field, omega, m.N);
  std::vector<MatModN> kernel;
  for (const auto& u : units(m.field)) kernel.push_back(w_matrix(m.field, u, m.N));
  MatModN power = alpha;
  for (i64 k = 1;; ++k) {
    if (std::find(kernel.begin(), kernel.end(), power) != kernel.end()) return k;
    power = power * alpha;
  }
}

SL2Lift decompose_gl2(const MatModN& alpha) {
  const i64 M = alpha.n;
  const i64 det = alpha.det();
  if (gcd(det, M) != 1) throw DomainError("matrix " + alpha.to_string() + " is singular mod " + std::to_string(M));
  SL2Lift out;
  out.target = alpha;
  out.det_part = det;
  const i64 inv = inv_mod(det, M);
  // alpha' = diag(1, det^{-1}) alpha
  MatModN target = MatModN(M, 1, 0, 0, inv) * alpha;
  const i64 a = target.a(), b = target.b();
  i64 c = target.c() == 0 ? M : target.c();
  i64 d = target.d();
  while (gcd(c, d) != 1) d += M;
  Bezout bz = ext_gcd(d, c);  // x d + y c = 1
  const i64 a0 = bz.x, b0 = -bz.y;
  Bezout uv = ext_gcd(c, d);  // u c + v d = 1
  const __int128 k = mod(static_cast<i64>((static_cast<__int128>(mod(a - a0, M)) * mod(uv.x, M) +
                                           static_cast<__int128>(mod(b - b0, M)) * mod(uv.y, M)) %
                                          M),
                         M);
  const i64 a1 = static_cast<i64>(a0 + k * c);
  const i64 b1 = static_cast<i64>(b0 + k * d);
  out.matrix = {a1, b1, c, d};
  if (static_cast<__int128>(a1) * d - static_cast<__int128>(b1) * c != 1) throw std::logic_error("SL2 lift failed");
  return out;
}

int a_sign(const IndexVector& r, int exponent, i64 level, i64 det) {
  mpq_class x = std::abs(exponent) * level * r.r2 * (r.r1 - 1);
  x.canonicalize();
  return (x.get_den() == 1 && mpz_odd_p(x.get_num_mpz_t()) && det % 2 == 0) ? -1 : 1;
}

IndexAction act_on_index(const IndexVector& r, const MatModN& alpha, int exponent, i64 level) {
  if (alpha.n != level) throw DomainError("matrix modulus differs from the level");
  if (level % r.level() != 0) {
    throw DomainError("index " + r.to_string() + " has denominator not dividing " + std::to_string(level));
  }
  SL2Lift lift = decompose_gl2(alpha);
  const auto& A = lift.matrix;
  mpq_class r1 = r.r1, r2 = r.r2 * lift.det_part;
  IndexVector s(A[0] * r1 + A[2] * r2, A[1] * r1 + A[3] * r2);
  ReducedIndex red = reduce_with_phase(s);
  return {red.reduced, a_sign(r, exponent, level, lift.det_part), s, red.phase};
}

std::vector<GaloisElement> galois_orbit(const RayModulus& m, i64 level, const FormClassGroup& fcg) {
  if (level < 2 || level % m.N != 0) throw DomainError("level must be a multiple of N");
  WGroup W = build_w_group(m.field, level);
  std::vector<GaloisElement> out;
  out.reserve(W.coset_reps.size() * fcg.size());
  for (std::size_t qi = 0; qi < fcg.forms.size(); ++qi) {
    const QuadForm& Q = fcg.forms[qi];
    MatModN beta = beta_q_matrix(Q, level);
    for (const auto& alpha : W.coset_reps) {
      GaloisElement g;
      g.alpha_coset = alpha;
      g.form = Q;
      g.form_index = qi;
      g.composite = alpha * beta;
      g.lift = decompose_gl2(g.composite);
      out.push_back(std::move(g));
    }
  }
  return out;
}

bool phase_in_cyclotomic(const mpq_class& x, i64 level) {
  mpq_class scaled = x * level;
  if (level % 2 == 0) scaled /= 2;
  scaled.canonicalize();
  return scaled.get_den() == 1;
}

mpq_class combined_phase(const Family& family, const mpq_class& phase) {
  mpq_class x = phase;
  for (const auto& [r, mult] : family) x += mult * r.r2 * (r.r1 - 1);
  x.canonicalize();
  return x;
}

TransformedFamily act_on_family(const Family& family, const mpq_class& phase, const GaloisElement& g) {
  const i64 M = g.composite.n;
  int weight = 0;
  for (const auto& f : family) weight += f.second;
  if (weight % 12 != 0) throw DomainError("total Siegel weight must be divisible by 12");
  mpq_class x = combined_phase(family, phase);
  if (!phase_in_cyclotomic(x, M)) throw DomainError("phase is not in Q(zeta_" + std::to_string(M) + ")");
  const i64 d = g.lift.det_part;
  // sigma_d on the root of unity e^{i pi x}; for odd M pick the odd lift of d.
  const i64 d_lift = (M % 2 == 1 && d % 2 == 0) ? d + M : d;
  TransformedFamily out;
  out.phase = x * d_lift;
  const auto& A = g.lift.matrix;
  for (const auto& [r, mult] : family) {
    mpq_class r1 = r.r1, r2 = r.r2 * d;
    out.phase -= mult * r2 * (r1 - 1);
    IndexVector s(A[0] * r1 + A[2] * r2, A[1] * r1 + A[3] * r2);
    ReducedIndex red = reduce_with_phase(s);
    out.phase += mult * red.phase;
    out.factors.emplace_back(red.reduced, mult);
  }
  out.phase = frac(out.phase / 2) * 2;
  return out;
}

bool level_admissible(const InvariantSpec& spec, i64 level) {
  Family fam = spec.family();
  for (const auto& f : fam) {
    if (level % f.first.level() != 0) return false;
  }
  if (!modularity_check(fam, level)) return false;
  return phase_in_cyclotomic(combined_phase(fam, spec.phase), level);
}

i64 select_level(const InvariantSpec& spec, i64 max_multiple) {
  for (i64 k = 1; k <= max_multiple; ++k) {
    if (level_admissible(spec, k * spec.conductor)) return k * spec.conductor;
  }
  throw DomainError("no admissible level found for the invariant");
}

}  // namespace cmforge
