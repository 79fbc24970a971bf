#pragma once

#include <cstdint>
#include <vector>

#include "douady/partitions.hpp"
#include "douady/poly.hpp"
#include "douady/surface.hpp"

namespace douady {

// Stalk dimensions of R^{2h} pi_* Q at a point of the stratum of type nu.
// Depends only on nu; odd direct images vanish and are not stored.
struct StalkTable {
  Partition nu;
  std::vector<std::int64_t> rows;  // rows[h], h = 0..n-1

  std::int64_t at(int h) const noexcept;  // zero outside 0..n-1
  CoeffPoly poincare() const;             // sum_h rows[h] t^{2h}
};

// Partitions a of n with len(a) <= n - h, in enumeration order.
std::vector<Partition> support_strata(int n, int h);

// rows[h] = |fiber_S_h(h, nu)|.
StalkTable stalk_table(const Partition& nu);

// Stalk polynomial versus prod_j P_t(punctual Hilbert scheme of nu_j points).
bool local_fiber_check(const Partition& nu);

// decomposition_poincare(s, n) against the same sum regrouped by h:
// sum_h t^{2h} sum_{len a = n - h} poincare_stratum_space(s, a).
bool global_degeneration_check(const SurfaceModel& s, int n);

// The regrouped side of global_degeneration_check.
CoeffPoly leray_regrouped_poincare(const SurfaceModel& s, int n);

}  // namespace douady
