#include "polyrep/repcount.hpp"

#include <stdexcept>

#include "polyrep/arith.hpp"

namespace polyrep::repcount {

namespace {
using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

u64 abs_diff(u64 a, u64 b) { return a > b ? a - b : b - a; }
}  // namespace

u64 target_value(const Family& family, u64 n) {
  if (n == 0) throw std::invalid_argument("target_value: n must be positive");
  const u128 z = 2 * u128{static_cast<u64>(family.m - 2)} * n * n +
                 u128{static_cast<u64>(family.t)} *
                     static_cast<u64>((family.m - 4) * (family.m - 4));
  if (z > u128{UINT64_MAX})
    throw std::overflow_error("target_value: exceeds 64 bits");
  return static_cast<u64>(z);
}

std::vector<Representation> representations(const Family& family, u64 n) {
  if (n == 0) throw std::invalid_argument("representations: n must be positive");
  std::vector<Representation> out;
  for (u64 a = n - 1; a >= (n + 1) / 2 && a >= 1; --a) {
    const u64 b = n - a;
    if (auto c = polygonal::index_of_multiple(family, a * b)) {
      out.push_back({a, b, *c});
    }
  }
  return out;
}

std::vector<QPair> qsolutions(const Family& family, u64 n) {
  const u64 z = target_value(family, n);
  const u64 coeff = 2 * static_cast<u64>(family.m - 2);
  const u64 t = static_cast<u64>(family.t);
  std::vector<QPair> out;
  for (u64 x = 0; u128{coeff} * x * x <= z; ++x) {
    const u64 rem = z - coeff * x * x;
    if (rem % t != 0) continue;
    if (auto y = arith::is_square(rem / t)) out.push_back({x, *y});
  }
  return out;
}

QPair qpair_from_representation(const Family& family, u64 n,
                                const Representation& rep) {
  if (rep.b < 1 || rep.a < rep.b || rep.a + rep.b != n)
    throw std::invalid_argument("qpair_from_representation: bad pair (a,b)");
  if (!polygonal::valid_index(family.m, rep.c) ||
      rep.a * rep.b !=
          static_cast<u64>(family.t) * polygonal::value(family.m, rep.c))
    throw std::invalid_argument("qpair_from_representation: ab != t*P(m,c)");
  const i64 w = 2 * (family.m - 2) * rep.c - (family.m - 4);
  return {abs_diff(rep.a, rep.b), static_cast<u64>(w < 0 ? -w : w)};
}

std::optional<Representation> representation_from_qpair(const Family& family,
                                                        u64 n,
                                                        const QPair& pair) {
  const u64 coeff = 2 * static_cast<u64>(family.m - 2);
  if (u128{coeff} * pair.x * pair.x +
          u128{static_cast<u64>(family.t)} * pair.y * pair.y !=
      target_value(family, n))
    throw std::invalid_argument(
        "representation_from_qpair: pair violates the quadratic identity");
  if (pair.x >= n) return std::nullopt;
  if ((n - pair.x) % 2 != 0) return std::nullopt;
  const u64 a = (n + pair.x) / 2;
  const u64 b = (n - pair.x) / 2;
  const i64 den = static_cast<i64>(coeff);
  for (const i64 num : {family.m - 4 + static_cast<i64>(pair.y),
                        family.m - 4 - static_cast<i64>(pair.y)}) {
    if (num % den != 0) continue;
    const i64 c = num / den;
    if (!polygonal::valid_index(family.m, c)) continue;
    if (a * b !=
        static_cast<u64>(family.t) * polygonal::value(family.m, c))
      continue;
    return Representation{a, b, c};
  }
  return std::nullopt;
}

}  // namespace polyrep::repcount
