#include "polyrep/arith.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace polyrep::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> primes;
    for (u64 i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      primes.push_back(static_cast<std::uint32_t>(i));
      for (u64 j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return primes;
  }();
  return table;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::atomic<u64> rho_seed{1};

// n must be odd, composite, and free of factors below the trial bound.
u64 pollard_rho(u64 n) {
  const u64 seed = rho_seed.load(std::memory_order_relaxed);
  for (u64 attempt = 0;; ++attempt) {
    const u64 c = 1 + (seed + attempt) % (n - 1);
    auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    u64 x = 2 + attempt % 64, y = x, d = 1;
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_large(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> ps)
    : PrimeSet(std::vector<std::uint64_t>(ps)) {}

PrimeSet::PrimeSet(std::vector<std::uint64_t> ps) : primes_(std::move(ps)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (u64 p : primes_) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeSet: member is not prime");
  }
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && u128{r} * r > n) --r;
  while (u128{r + 1} * (r + 1) <= n) ++r;
  return r;
}

std::optional<std::uint64_t> is_square(std::uint64_t n) {
  const u64 r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;

  const int rank = std::countr_zero(n - 1);
  const u64 odd_part = (n - 1) >> rank;
  // Witness set proven sufficient for all n < 2^64.
  for (u64 base : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                   1795265022ull}) {
    u64 a = base % n;
    if (a == 0) continue;
    u64 x = pow_mod(a, odd_part, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < rank; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void set_rho_seed(std::uint64_t seed) {
  rho_seed.store(seed == 0 ? 1 : seed, std::memory_order_relaxed);
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  out.value = n;
  u64 rest = n;
  for (std::uint32_t p : small_primes()) {
    if (u64{p} * p > rest) break;
    if (rest % p == 0) {
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      out.factors.push_back({p, e});
    }
  }
  if (rest > 1) {
    std::vector<u64> large;
    factor_large(rest, large);
    std::sort(large.begin(), large.end());
    for (std::size_t i = 0; i < large.size();) {
      std::size_t j = i;
      while (j < large.size() && large[j] == large[i]) ++j;
      out.factors.push_back({large[i], static_cast<int>(j - i)});
      i = j;
    }
  }
  return out;
}

int ord_p(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("ord_p: n must be positive");
  if (!is_prime(p)) throw std::invalid_argument("ord_p: p must be prime");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t divisor_count_excluding(std::uint64_t n, const PrimeSet& excluded) {
  return divisor_count_excluding(factorize(n), excluded);
}

std::uint64_t divisor_count_excluding(const Factorization& f,
                                      const PrimeSet& excluded) {
  u64 count = 1;
  for (const auto& [p, e] : f.factors) {
    if (!excluded.contains(p)) count *= static_cast<u64>(e) + 1;
  }
  return count;
}

int kronecker(std::int64_t a, std::int64_t k) {
  if (k == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (k & 1) == 0) return 0;
  int result = 1;
  int twos = 0;
  while ((k & 1) == 0) {
    k /= 2;
    ++twos;
  }
  if (twos & 1) {
    const int r = static_cast<int>(((a % 8) + 8) % 8);
    if (r == 3 || r == 5) result = -result;
  }
  if (k < 0) {
    k = -k;
    if (a < 0) result = -result;
  }
  a %= k;
  if (a < 0) a += k;
  while (a != 0) {
    while ((a & 1) == 0) {
      a /= 2;
      const int r = static_cast<int>(k % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, k);
    if ((a & 3) == 3 && (k & 3) == 3) result = -result;
    a %= k;
  }
  return k == 1 ? result : 0;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (int i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyrep::arith
