#include "cmforge/field_data.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmforge/errors.hpp"

namespace cmforge {

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::split:
      return "split";
    case Splitting::inert:
      return "inert";
    case Splitting::ramified:
      return "ramified";
  }
  return "?";
}

int kronecker(i64 d_K, i64 p) {
  if (!is_prime(p)) throw DomainError("kronecker: " + std::to_string(p) + " is not prime");
  if (p == 2) {
    if (d_K % 2 == 0) return 0;
    i64 r = mod(d_K, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  i64 r = mod(d_K, p);
  if (r == 0) return 0;
  return pow_mod(r, static_cast<std::uint64_t>((p - 1) / 2), p) == 1 ? 1 : -1;
}

Splitting ImagQuadField::splitting(i64 p) const {
  switch (kronecker(d_K, p)) {
    case 1:
      return Splitting::split;
    case -1:
      return Splitting::inert;
    default:
      return Splitting::ramified;
  }
}

ImagQuadField make_field(i64 d) {
  if (d <= 0) throw DomainError("d must be positive");
  if (!is_squarefree(d)) throw DomainError("d must be square-free");
  ImagQuadField K;
  K.d = d;
  if (mod(-d, 4) == 1) {
    K.d_K = -d;
    K.B_theta = 1;
    K.C_theta = (1 - K.d_K) / 4;
  } else {
    K.d_K = -4 * d;
    K.B_theta = 0;
    K.C_theta = -K.d_K / 4;
  }
  K.omega_K = K.d_K == -4 ? 4 : (K.d_K == -3 ? 6 : 2);
  K.forms = enumerate_reduced_forms(K.d_K);
  K.h_K = static_cast<int>(K.forms.size());
  return K;
}

i64 norm(const ImagQuadField& K, const AlgebraicIntegerZTheta& w) {
  return w.t * w.t - K.B_theta * w.s * w.t + K.C_theta * w.s * w.s;
}

AlgebraicIntegerZTheta multiply(const ImagQuadField& K, const AlgebraicIntegerZTheta& x,
                                const AlgebraicIntegerZTheta& y) {
  // theta^2 = -B theta - C
  i64 ss = x.s * y.s;
  return {x.s * y.t + x.t * y.s - K.B_theta * ss, x.t * y.t - K.C_theta * ss};
}

std::vector<AlgebraicIntegerZTheta> units(const ImagQuadField& K) {
  if (K.is_gaussian()) return {{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
  if (K.is_eisenstein()) return {{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, -1}};
  return {{0, 1}, {0, -1}};
}

const PrimeLocal& RayModulus::local(i64 p) const {
  for (const auto& pl : prime_local_data) {
    if (pl.p == p) return pl;
  }
  throw DomainError(std::to_string(p) + " does not divide N=" + std::to_string(N));
}

RayModulus make_modulus(const ImagQuadField& K, i64 N) {
  if (N < 2) throw DomainError("N must be at least 2");
  RayModulus m;
  m.field = K;
  m.N = N;
  for (auto [p, e] : factorize(N)) m.prime_local_data.push_back({p, K.splitting(p), e});
  return m;
}

std::vector<IdealComponent> components(const RayModulus& m) {
  std::vector<IdealComponent> out;
  for (const auto& pl : m.prime_local_data) {
    switch (pl.type) {
      case Splitting::inert:
        out.push_back({pl.p, pl.type, pl.n_p, 0});
        break;
      case Splitting::ramified:
        out.push_back({pl.p, pl.type, 2 * pl.n_p, 0});
        break;
      case Splitting::split:
        out.push_back({pl.p, pl.type, pl.n_p, 0});
        out.push_back({pl.p, pl.type, pl.n_p, 1});
        break;
    }
  }
  return out;
}

namespace {

// Root of X^2 + B X + C modulo p^k lifted from the conjugate-th root mod p.
i64 split_root(const ImagQuadField& K, i64 p, int k, int conjugate) {
  std::vector<i64> roots;
  for (i64 x = 0; x < p; ++x) {
    if (mod(x * x + K.B_theta * x + K.C_theta, p) == 0) roots.push_back(x);
  }
  if (roots.size() != 2) throw DomainError("prime " + std::to_string(p) + " does not split");
  i64 lam = roots[conjugate];
  i64 pk = p;
  for (int j = 1; j < k; ++j) {
    pk *= p;
    __int128 f = static_cast<__int128>(lam) * lam + K.B_theta * lam + K.C_theta;
    i64 fm = static_cast<i64>(f % pk);
    i64 deriv = mod(2 * lam + K.B_theta, pk);
    lam = mod(lam - static_cast<i64>((static_cast<__int128>(fm) * inv_mod(deriv, pk)) % pk), pk);
  }
  return lam;
}

}  // namespace

bool ideal_contains(const ImagQuadField& K, const IdealComponent& P, const AlgebraicIntegerZTheta& x) {
  if (x.s == 0 && x.t == 0) return true;
  if (P.type == Splitting::split) {
    i64 pk = ipow(P.p, P.k);
    i64 lam = split_root(K, P.p, P.k, P.conjugate);
    return mod(static_cast<i64>((static_cast<__int128>(x.s) * lam + x.t) % pk), pk) == 0;
  }
  int v = valuation(norm(K, x), P.p);
  return P.type == Splitting::inert ? v >= 2 * P.k : v >= P.k;
}

i64 phi_component(const IdealComponent& P) {
  i64 q = P.type == Splitting::inert ? P.p * P.p : P.p;
  return ipow(q, P.k) - ipow(q, P.k - 1);
}

int omega_of(const ImagQuadField& K, const std::vector<IdealComponent>& f) {
  int count = 0;
  for (const auto& u : units(K)) {
    AlgebraicIntegerZTheta diff{u.s, u.t - 1};
    if (std::all_of(f.begin(), f.end(), [&](const IdealComponent& P) { return ideal_contains(K, P, diff); })) ++count;
  }
  return count;
}

i64 degree_of(const ImagQuadField& K, const std::vector<IdealComponent>& f) {
  i64 phi = 1;
  for (const auto& P : f) phi *= phi_component(P);
  i64 num = static_cast<i64>(K.h_K) * phi * omega_of(K, f);
  if (num % K.omega_K != 0) throw std::logic_error("ray class degree not integral");
  return num / K.omega_K;
}

i64 euler_phi_ideal(const RayModulus& m) {
  i64 phi = 1;
  for (const auto& P : components(m)) phi *= phi_component(P);
  return phi;
}

int omega_f(const RayModulus& m) {
  int count = 0;
  for (const auto& u : units(m.field)) {
    if (mod(u.s, m.N) == 0 && mod(u.t - 1, m.N) == 0) ++count;
  }
  return count;
}

i64 ray_class_degree(const RayModulus& m) {
  i64 num = static_cast<i64>(m.field.h_K) * euler_phi_ideal(m) * omega_f(m);
  if (num % m.field.omega_K != 0) throw std::logic_error("ray class degree not integral");
  return num / m.field.omega_K;
}

namespace {

IdealComponent component_over(const RayModulus& m, i64 p) {
  for (const auto& P : components(m)) {
    if (P.p == p) return P;
  }
  throw DomainError(std::to_string(p) + " does not divide N=" + std::to_string(m.N));
}

i64 gi_order(const ImagQuadField& K, const IdealComponent& P) {
  i64 num = phi_component(P) * omega_of(K, {P});
  if (num % K.omega_K != 0) throw std::logic_error("|G_i| not integral");
  return num / K.omega_K;
}

}  // namespace

i64 g_i_order(const RayModulus& m, i64 p) { return gi_order(m.field, component_over(m, p)); }

bool lemma_table_le2(const ImagQuadField& K, i64 p, Splitting type, int k) {
  if (K.is_gaussian()) return (p == 2 && k <= 4) || (p == 3 && k == 1) || (p == 5 && k == 1);
  if (K.is_eisenstein()) {
    return (p == 2 && k <= 2) || (p == 3 && k <= 2) || (p == 7 && k == 1) || (p == 13 && k == 1);
  }
  if (type == Splitting::inert) return false;
  return (p == 2 && k <= 3) || (p == 3 && k == 1) || (p == 5 && k == 1);
}

bool lemma_table_eq3(const ImagQuadField& K, i64 p, Splitting type, int k) {
  if (K.is_gaussian()) return p == 13 && k == 1;
  if (K.is_eisenstein()) return (p == 3 && k == 3) || (p == 19 && k == 1);
  if (p == 2) return type == Splitting::inert && k == 1;
  if (type == Splitting::inert) return false;
  return (p == 3 && k == 2) || (p == 7 && k == 1);
}

std::vector<SmallGiRow> check_small_gi_table(const RayModulus& m) {
  std::vector<SmallGiRow> rows;
  for (const auto& pl : m.prime_local_data) {
    IdealComponent P = component_over(m, pl.p);
    i64 order = gi_order(m.field, P);
    bool ok = (order <= 2) == lemma_table_le2(m.field, P.p, P.type, P.k) &&
              (order == 3) == lemma_table_eq3(m.field, P.p, P.type, P.k);
    rows.push_back({pl.p, order, ok});
  }
  return rows;
}

bool degree_drop_test(const RayModulus& m) {
  auto f = components(m);
  i64 full = degree_of(m.field, f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto rest = f;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (degree_of(m.field, rest) >= full) return false;
  }
  return true;
}

i64 k_p(const RayModulus& m, i64 p) {
  if (p % 2 == 0 || m.N % p != 0) throw DomainError("k_p needs an odd prime dividing N");
  const auto& pl = m.local(p);
  const auto& K = m.field;
  if (K.d_K % p != 0 && pl.n_p == 1) {
    i64 base = p - kronecker(K.d_K, p);
    return m.N == p ? base / K.omega_K : base / 2;
  }
  return p;
}

AlgebraicIntegerZTheta beta_of_lemma(const RayModulus& m, i64 p) {
  const auto& K = m.field;
  if (p % 2 == 0 || !is_prime(p) || m.N % p != 0) throw DomainError("beta needs an odd prime dividing N");
  if ((static_cast<__int128>(m.N) * K.d_K) % (p * p) != 0) throw DomainError("beta needs p^2 | N d_K");
  i64 c = p == 3 ? 2 * m.N / 3 : 6 * m.N / p;  // beta = 1 + c*sqrt(-d)
  // sqrt(-d) = theta when d_K = 0 mod 4, else 2 theta + 1.
  if (mod(K.d_K, 4) == 0) return {c, 1};
  return {2 * c, c + 1};
}

}  // namespace cmforge
