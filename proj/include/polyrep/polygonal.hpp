#pragma once

#include <cstdint>
#include <optional>

namespace polyrep {

/// The pair (m, t): polygon order and multiplier in ab = t*P(m,c).
struct Family {
  Family(std::int64_t m, std::int64_t t);
  std::int64_t m;
  std::int64_t t;
  friend bool operator==(const Family&, const Family&) = default;
};

namespace polygonal {

/// Index domain keeping c -> P(m,c) injective: c >= 1 for m in {3,4},
/// any integer for m > 4.
bool valid_index(std::int64_t m, std::int64_t c);

/// P(m,c) = c((m-2)c-(m-4))/2. Rejects indices outside the valid domain.
std::uint64_t value(std::int64_t m, std::int64_t c);

/// The unique valid c with P(m,c) = v, if any.
std::optional<std::int64_t> index_of(std::int64_t m, std::uint64_t v);

/// The unique valid c with t*P(m,c) = v, if any.
std::optional<std::int64_t> index_of_multiple(const Family& family,
                                              std::uint64_t v);

}  // namespace polygonal
}  // namespace polyrep
