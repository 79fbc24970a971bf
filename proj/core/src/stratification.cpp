#include "douady/stratification.hpp"

#include "douady/goettsche.hpp"

namespace douady {

std::int64_t StalkTable::at(int h) const noexcept {
  if (h < 0 || h >= static_cast<int>(rows.size())) return 0;
  return rows[static_cast<std::size_t>(h)];
}

CoeffPoly StalkTable::poincare() const {
  CoeffPoly p;
  for (std::size_t h = 0; h < rows.size(); ++h) {
    p.add_term({2 * static_cast<int>(h), 0, 0}, Rational(static_cast<long>(rows[h])));
  }
  return p;
}

std::vector<Partition> support_strata(int n, int h) {
  std::vector<Partition> out;
  for (auto& a : enumerate(n)) {
    if (a.length() <= n - h) out.push_back(std::move(a));
  }
  return out;
}

StalkTable stalk_table(const Partition& nu) {
  StalkTable table{nu, {}};
  for (int h = 0; h < nu.weight(); ++h) {
    table.rows.push_back(static_cast<std::int64_t>(fiber_S_h(h, nu).size()));
  }
  return table;
}

bool local_fiber_check(const Partition& nu) {
  CoeffPoly local(1);
  for (int part : nu.parts()) local = local * poincare_punctual(part);
  return stalk_table(nu).poincare() == local;
}

CoeffPoly leray_regrouped_poincare(const SurfaceModel& s, int n) {
  CoeffPoly total;
  for (int h = 0; h <= n; ++h) {
    CoeffPoly layer;
    for (const auto& a : enumerate(n)) {
      if (a.length() == n - h) layer += poincare_stratum_space(s, a);
    }
    total += CoeffPoly::t_power(2 * h) * layer;
  }
  return total;
}

bool global_degeneration_check(const SurfaceModel& s, int n) {
  return decomposition_poincare(s, n) == leray_regrouped_poincare(s, n);
}

}  // namespace douady
