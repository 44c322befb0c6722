#include "cmforge/diophantine.hpp"

#include <cmath>

#include "cmforge/errors.hpp"
#include "cmforge/field_data.hpp"
#include "cmforge/parallel.hpp"

namespace cmforge {

namespace {

using u64 = std::uint64_t;
using Fp = std::vector<u64>;  // ascending coefficients mod p

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 reduce(const mpz_class& c, i64 p) {
  return mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
}

void trim(Fp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Fp to_fp(const PolyZ& f, i64 p) {
  Fp out;
  for (const auto& c : f.ascending()) out.push_back(reduce(c, p));
  trim(out);
  return out;
}

Fp fp_mod(Fp a, const Fp& m, u64 p) {
  const u64 inv = static_cast<u64>(inv_mod(static_cast<i64>(m.back()), static_cast<i64>(p)));
  while (a.size() >= m.size()) {
    u64 coef = mulm(a.back(), inv, p);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mulm(coef, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Fp fp_mulmod(const Fp& a, const Fp& b, const Fp& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Fp out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulm(a[i], b[j], p)) % p;
  }
  trim(out);
  return fp_mod(std::move(out), m, p);
}

Fp fp_powmod(Fp base, u64 e, const Fp& m, u64 p) {
  Fp result{1};
  base = fp_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = fp_mulmod(result, base, m, p);
    base = fp_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Fp fp_gcd(Fp a, Fp b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const u64 inv = static_cast<u64>(inv_mod(static_cast<i64>(a.back()), static_cast<i64>(p)));
    for (auto& c : a) c = mulm(c, inv, p);
  }
  return a;
}

Fp fp_sub(Fp a, const Fp& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// One root of a monic squarefree product of distinct linear factors.
u64 split_root(Fp g, u64 p) {
  for (u64 a = 0;; ++a) {
    if (g.size() == 2) return (p - g[0]) % p;
    if (g.size() < 2) throw std::logic_error("root splitting lost all factors");
    Fp shifted = fp_powmod(Fp{a % p, 1}, (p - 1) / 2, g, p);
    Fp h = fp_gcd(g, fp_sub(shifted, Fp{1}, p), p);
    if (h.size() >= 2 && h.size() < g.size()) g = std::move(h);
  }
}

}  // namespace

DiophQuery make_query(i64 n, i64 N, const PolyZ& f, i64 p) {
  return {n, N, f, discriminant(f), p};
}

std::optional<i64> root_mod_p_scan(const PolyZ& f, i64 p) {
  Fp fp = to_fp(f, p);
  const u64 up = static_cast<u64>(p);
  for (u64 x = 0; x < up; ++x) {
    u64 acc = 0;
    for (auto it = fp.rbegin(); it != fp.rend(); ++it) acc = (mulm(acc, x, up) + *it) % up;
    if (acc == 0) return static_cast<i64>(x);
  }
  return std::nullopt;
}

std::optional<i64> root_mod_p_gcd(const PolyZ& f, i64 p) {
  const u64 up = static_cast<u64>(p);
  Fp fp = to_fp(f, p);
  if (fp.size() < 2) return fp.empty() ? std::optional<i64>(0) : std::nullopt;
  if (fp[0] == 0) return 0;
  Fp xp = fp_powmod(Fp{0, 1}, up, fp, up);
  Fp g = fp_gcd(fp, fp_sub(xp, Fp{0, 1}, up), up);
  if (g.size() < 2) return std::nullopt;
  return static_cast<i64>(split_root(std::move(g), up));
}

std::optional<i64> root_mod_p(const PolyZ& f, i64 p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return p < 1000000 ? root_mod_p_scan(f, p) : root_mod_p_gcd(f, p);
}

bool criterion(const DiophQuery& q) {
  if (q.p % 2 == 0 || !is_prime(q.p)) throw DomainError("p must be an odd prime");
  if ((q.n * q.N) % q.p == 0) throw PreconditionExcluded(std::to_string(q.p) + " divides nN");
  if (mpz_divisible_ui_p(q.disc.get_mpz_t(), static_cast<unsigned long>(q.p)) != 0) {
    throw PreconditionExcluded(std::to_string(q.p) + " divides disc(f_N)");
  }
  if (kronecker(-4 * q.n, q.p) != 1) return false;
  return root_mod_p(q.f, q.p).has_value();
}

std::optional<std::pair<i64, i64>> brute_force_representation(i64 n, i64 N, i64 p) {
  if (p < 2 || n < 1 || N < 1) throw DomainError("need p >= 2, n >= 1, N >= 1");
  for (i64 k = 0;; ++k) {
    const __int128 y = static_cast<__int128>(k) * N;
    const __int128 rest = static_cast<__int128>(p) - n * y * y;
    if (rest < 0) break;
    i64 x = static_cast<i64>(std::sqrt(static_cast<double>(rest)));
    while (static_cast<__int128>(x) * x > rest) --x;
    while (static_cast<__int128>(x + 1) * (x + 1) <= rest) ++x;
    if (static_cast<__int128>(x) * x != rest) continue;
    if (mod(x, N) == mod(1, N)) return std::pair<i64, i64>{x, static_cast<i64>(y)};
    if (mod(-x, N) == mod(1, N)) return std::pair<i64, i64>{-x, static_cast<i64>(y)};
  }
  return std::nullopt;
}

CrossValidation cross_validate(i64 n, i64 N, const PolyZ& f, i64 prime_bound, int threads) {
  CrossValidation report;
  report.n = n;
  report.N = N;
  report.bound = prime_bound;
  const mpz_class disc = discriminant(f);
  std::vector<i64> primes;
  for (i64 p : primes_up_to(prime_bound)) {
    if (p == 2) continue;
    if ((n * N) % p == 0) {
      report.nN_excluded_primes.push_back(p);
    } else if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
      report.disc_excluded_primes.push_back(p);
    } else {
      primes.push_back(p);
    }
  }
  struct Outcome {
    bool crit = false;
    bool brute = false;
    bool symbol = false;
  };
  std::vector<Outcome> outcomes(primes.size());
  parallel_for(primes.size(), threads, [&](std::size_t i) {
    DiophQuery q{n, N, f, disc, primes[i]};
    outcomes[i] = {criterion(q), brute_force_representation(n, N, primes[i]).has_value(),
                   kronecker(-4 * n, primes[i]) == 1};
  });
  for (std::size_t i = 0; i < primes.size(); ++i) {
    ++report.checked;
    if (outcomes[i].brute) ++report.representable;
    if (outcomes[i].brute && !outcomes[i].symbol) report.symbol_violations.push_back(primes[i]);
    if (outcomes[i].crit != outcomes[i].brute) report.mismatches.push_back({primes[i], outcomes[i].crit, outcomes[i].brute});
  }
  return report;
}

}  // namespace cmforge
