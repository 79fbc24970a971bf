#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "douady/rational.hpp"

namespace douady {

using BettiVector = std::array<int, 5>;
using RationalMatrix = std::vector<std::vector<Rational>>;

struct HodgeType {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const HodgeType&, const HodgeType&) = default;
};

// h^{p,q} keyed by (p, q).
using HodgeNumbers = std::map<HodgeType, int>;

// One basis element of H^*(X) or H^*_c(X).
struct CohomologyClass {
  int degree = 0;
  std::optional<HodgeType> hodge;  // ordinary classes of Hodge-complete models only
  bool odd() const noexcept { return degree % 2 != 0; }
};

// Graded super vector space data of a complex surface: ordinary and
// compactly supported Betti numbers, the pairing H^d x H^{4-d}_c -> Q, and
// optional Hodge numbers of a pure structure.
class SurfaceModel {
 public:
  // pairing_blocks[d] is a betti[d] x betti_c[4-d] matrix. Throws
  // InvalidSurface when shapes, nondegeneracy or Hodge data are inconsistent.
  SurfaceModel(std::string name, BettiVector betti, BettiVector betti_c,
               std::array<RationalMatrix, 5> pairing_blocks,
               std::optional<HodgeNumbers> hodge = std::nullopt);

  // Identity pairing blocks; requires betti[d] == betti_c[4-d].
  static SurfaceModel with_identity_pairing(std::string name, BettiVector betti,
                                            BettiVector betti_c,
                                            std::optional<HodgeNumbers> hodge = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const BettiVector& betti() const noexcept { return betti_; }
  const BettiVector& betti_c() const noexcept { return betti_c_; }
  const std::optional<HodgeNumbers>& hodge() const noexcept { return hodge_; }
  bool has_hodge() const noexcept { return hodge_.has_value(); }
  const RationalMatrix& pairing_block(int degree) const { return blocks_.at(static_cast<std::size_t>(degree)); }

  int total_betti() const noexcept;
  int euler() const noexcept;  // sum (-1)^d b_d
  int even_dim() const noexcept;
  int odd_dim() const noexcept;

  // Ordinary classes sorted by degree (and by decreasing p inside a degree
  // when Hodge data is present); compact classes sorted by degree.
  const std::vector<CohomologyClass>& classes() const noexcept { return classes_; }
  const std::vector<CohomologyClass>& compact_classes() const noexcept { return compact_; }

  // <alpha, beta> for ordinary class index alpha and compact class index beta.
  // Throws UnknownClass.
  const Rational& pairing(std::size_t alpha, std::size_t beta) const;

 private:
  std::string name_;
  BettiVector betti_;
  BettiVector betti_c_;
  std::array<RationalMatrix, 5> blocks_;
  std::optional<HodgeNumbers> hodge_;
  std::vector<CohomologyClass> classes_;
  std::vector<CohomologyClass> compact_;
  // dense pairing, classes_.size() x compact_.size()
  RationalMatrix full_pairing_;
};

namespace presets {

SurfaceModel delta();     // the open disk / C^2: H^0 only, H^4_c only
SurfaceModel p2();
SurfaceModel p1xp1();
SurfaceModel k3();        // lattice U^3 + (-E8)^2 on H^2
SurfaceModel abelian();   // complex 2-torus, full Hodge diamond

// Preset names accepted by by_name(): delta (alias c2), p2, p1xp1, k3, abelian.
const std::vector<std::string>& names();
std::optional<SurfaceModel> by_name(std::string_view name);
// The five shipped presets in names() order.
std::vector<SurfaceModel> all();

}  // namespace presets

// Exact rank over Q (Gaussian elimination).
std::size_t rank(RationalMatrix m);

}  // namespace douady
