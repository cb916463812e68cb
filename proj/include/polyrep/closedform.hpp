#pragma once

#include <cstdint>
#include <vector>

#include "polyrep/arith.hpp"
#include "polyrep/polygonal.hpp"
#include "polyrep/qforms.hpp"

namespace polyrep::closedform {

/// Which fast path covers a family: the fourteen divisor-function formulas or
/// the ten cyclic-four-group cases.
enum class FormulaKind { divisor, z4 };

struct CaseDescriptor {
  Family family;
  std::int64_t z_a;  // tabulated z = z_a * n^2 + z_b
  std::int64_t z_b;
  std::int64_t d;
  qforms::QuadForm form_i;
  arith::PrimeSet excluded;
  FormulaKind kind;
  // divisor cases only: square multipliers s such that z in s*P marks n
  // unsolvable, and whether the count uses the halved d(z)/2 - 1 shape.
  std::vector<std::uint64_t> unsolvable_multipliers;
  bool halved_count = false;
};

const std::vector<CaseDescriptor>& divisor_cases();
const std::vector<CaseDescriptor>& z4_cases();

/// Descriptor lookup; nullptr when the family has no closed form.
const CaseDescriptor* find_case(const Family& family);

/// The tabulated z polynomial evaluated at n.
std::uint64_t tabulated_z(const CaseDescriptor& c, std::uint64_t n);

/// r_{m,t}(n) via the divisor-function formulas (fourteen families).
std::uint64_t r_divisor(const Family& family, std::uint64_t n);

/// True iff z lies in the tabulated union of s*P sets; equivalent to r = 0.
bool unsolvable_closed(const Family& family, std::uint64_t n);

/// r'_{m,t}(n) from the form count R([t,0,2(m-2)], z) with the axis
/// correction for solutions with x = 0. Valid for any family.
std::uint64_t rprime_closed(const Family& family, std::uint64_t n);

/// r_{m,t}(n) via the character-sum formula (ten cyclic-four-group rows).
std::uint64_t r_z4(const Family& family, std::uint64_t n);

/// The tabulated divisor expression for the principal character sum.
std::uint64_t table_principal(const Family& family, std::uint64_t n);

/// Dispatch to whichever closed form covers the family; rejects others.
std::uint64_t r_closed(const Family& family, std::uint64_t n);

}  // namespace polyrep::closedform
