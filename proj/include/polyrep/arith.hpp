#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace polyrep::arith {

struct PrimePower {
  std::uint64_t p;
  int e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of a positive integer into strictly increasing prime powers.
/// factorize(1) carries an empty factor list.
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;
};

/// Finite set of primes ignored by divisor counts (the A in d_A).
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<std::uint64_t> ps);
  explicit PrimeSet(std::vector<std::uint64_t> ps);

  bool contains(std::uint64_t p) const;
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }

 private:
  std::vector<std::uint64_t> primes_;  // sorted, unique, all prime
};

/// floor(sqrt(n)), exact over the full 64-bit range.
std::uint64_t isqrt(std::uint64_t n);

/// The root when n is a perfect square, empty otherwise.
std::optional<std::uint64_t> is_square(std::uint64_t n);

/// Deterministic Miller-Rabin, correct for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Reseeds the rho splitter. Only affects inputs whose second-largest prime
/// factor exceeds the trial-division bound; results are identical either way.
void set_rho_seed(std::uint64_t seed);

Factorization factorize(std::uint64_t n);

/// Exponent of the prime p in n.
int ord_p(std::uint64_t n, std::uint64_t p);

/// d_A(n): product of (1 + ord_p n) over primes p of n outside `excluded`.
std::uint64_t divisor_count_excluding(std::uint64_t n, const PrimeSet& excluded);
std::uint64_t divisor_count_excluding(const Factorization& f,
                                      const PrimeSet& excluded);

/// Kronecker symbol (a|k), extended to all integers k including k <= 0.
int kronecker(std::int64_t a, std::int64_t k);

/// All divisors of f.value, ascending.
std::vector<std::uint64_t> divisors(const Factorization& f);

}  // namespace polyrep::arith
