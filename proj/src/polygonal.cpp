#include "polyrep/polygonal.hpp"

#include <stdexcept>

#include "polyrep/arith.hpp"

namespace polyrep {

Family::Family(std::int64_t m_, std::int64_t t_) : m(m_), t(t_) {
  if (m < 3) throw std::invalid_argument("Family: polygon order m must be >= 3");
  if (t < 1) throw std::invalid_argument("Family: multiplier t must be >= 1");
}

namespace polygonal {

namespace {
using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
}  // namespace

bool valid_index(i64 m, i64 c) {
  if (m < 3) return false;
  if (m <= 4) return c >= 1;
  return true;
}

u64 value(i64 m, i64 c) {
  if (!valid_index(m, c))
    throw std::invalid_argument("polygonal::value: index outside valid domain");
  const i128 v = (i128{c} * ((m - 2) * i128{c} - (m - 4))) / 2;
  if (v > i128{static_cast<u64>(-1) / 2})
    throw std::overflow_error("polygonal::value: exceeds 64 bits");
  return static_cast<u64>(v);
}

std::optional<i64> index_of(i64 m, u64 v) {
  if (m < 3) throw std::invalid_argument("polygonal::index_of: m must be >= 3");
  if (v == 0) throw std::invalid_argument("polygonal::index_of: v must be >= 1");
  // (m-2)c^2 - (m-4)c - 2v = 0, solved exactly.
  const i128 disc = i128{m - 4} * (m - 4) + 8 * i128{m - 2} * i128{v};
  if (disc > i128{static_cast<u64>(-1)})
    throw std::overflow_error("polygonal::index_of: discriminant exceeds 64 bits");
  const u64 root = arith::isqrt(static_cast<u64>(disc));
  if (i128{root} * root != disc) return std::nullopt;
  const i64 den = 2 * (m - 2);
  for (const i128 num : {i128{m - 4} + root, i128{m - 4} - root}) {
    if (num % den != 0) continue;
    const i64 c = static_cast<i64>(num / den);
    if (valid_index(m, c) && value(m, c) == v) return c;
  }
  return std::nullopt;
}

std::optional<i64> index_of_multiple(const Family& family, u64 v) {
  if (v == 0)
    throw std::invalid_argument("polygonal::index_of_multiple: v must be >= 1");
  if (v % static_cast<u64>(family.t) != 0) return std::nullopt;
  return index_of(family.m, v / static_cast<u64>(family.t));
}

}  // namespace polygonal
}  // namespace polyrep
