#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "douady/partitions.hpp"
#include "douady/rational.hpp"
#include "douady/series.hpp"
#include "douady/surface.hpp"

namespace douady {

// Creation generator alpha[mode] with alpha the ordinary class `cls`.
struct FockFactor {
  int mode = 1;
  std::size_t cls = 0;
  friend auto operator<=>(const FockFactor&, const FockFactor&) = default;
};

// Product of creation generators in canonical (mode, class) order. Odd
// generators never repeat.
struct FockMonomial {
  std::vector<FockFactor> factors;

  int level() const noexcept;
  int degree(const SurfaceModel& model) const;
  std::string str() const;  // "1" for the vacuum, else e.g. "p[1,0]^2 p[2,3]"
  friend auto operator<=>(const FockMonomial&, const FockMonomial&) = default;
};

// Finite exact linear combination of monomials; zero coefficients are dropped.
class FockState {
 public:
  using Terms = std::map<FockMonomial, Rational>;

  FockState() = default;
  static FockState vacuum();
  static FockState single(FockMonomial m, const Rational& c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const FockMonomial& m) const;

  void add(const FockMonomial& m, const Rational& c);
  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(const Rational& c);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(FockState a, const Rational& c) { return a *= c; }
  friend bool operator==(const FockState&, const FockState&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

// Create(i, alpha) with alpha an ordinary class, Annihilate(i, beta) with beta a
// compactly supported class, or the central element.
struct HeisenbergOp {
  enum class Kind { Create, Annihilate, Central };
  Kind kind = Kind::Central;
  int mode = 0;
  std::size_t cls = 0;

  static HeisenbergOp create(int mode, std::size_t cls) { return {Kind::Create, mode, cls}; }
  static HeisenbergOp annihilate(int mode, std::size_t cls) { return {Kind::Annihilate, mode, cls}; }
  static HeisenbergOp central() { return {}; }

  // Z/2 degree: parity of the class degree; the central element is even.
  bool odd(const SurfaceModel& model) const;
  std::string str() const;
};

// Action on the Fock module. Create multiplies with the Koszul sign of moving
// the new factor into canonical position; Annihilate is the super-derivation
// with [R_beta[l], P_alpha[k]] = delta_{kl} (-1)^{k-1} k <alpha,beta>.
// Throws ModeNonPositive, UnknownClass.
FockState apply(const HeisenbergOp& op, const FockState& st, const SurfaceModel& model);

// op1 op2 st - (-1)^{|op1||op2|} op2 op1 st.
FockState commutator(const HeisenbergOp& op1, const HeisenbergOp& op2, const FockState& st,
                     const SurfaceModel& model);

// The value the supercommutator is required to take on st:
// zero for two creations or two annihilations, delta_{kl}(-1)^{k-1}k<alpha,beta> st
// for (Annihilate(l, beta), Create(k, alpha)) and its reverse up to sign.
FockState expected_commutator(const HeisenbergOp& op1, const HeisenbergOp& op2,
                              const FockState& st, const SurfaceModel& model);

// sum over monomials of level n <= order of t^{degree}, by direct enumeration.
QTSeries graded_character(const SurfaceModel& model, int order);

// Number of monomials of level n.
Integer level_dim(const SurfaceModel& model, int n);

// All monomials of level n, in canonical order.
std::vector<FockMonomial> enumerate_level(const SurfaceModel& model, int n);

// A monomial of the given level built from uniformly drawn generators
// (mode <= remaining level, any class), retried until no odd factor repeats.
FockMonomial random_monomial(const SurfaceModel& model, int level, std::mt19937_64& rng);

// sum of `terms` random monomials of level <= max_level with nonzero
// coefficients p/q, |p| <= 9, 1 <= q <= 4.
FockState random_state(const SurfaceModel& model, int max_level, int terms, std::mt19937_64& rng);

// (1/a!) p[nu_1] ... p[nu_k] (vacuum) on a model with a single ordinary
// class. Throws WrongModel otherwise.
FockState stratum_class(const Partition& nu, const SurfaceModel& model);

// Common cohomological degree of all monomials; nullopt when mixed or zero.
std::optional<int> degree_of(const FockState& st, const SurfaceModel& model);
// Common Hodge bidegree, each factor alpha[k] of type (p,q) contributing
// (p + k - 1, q + k - 1). Throws MissingHodgeData.
std::optional<std::pair<int, int>> bidegree_of(const FockState& st, const SurfaceModel& model);

}  // namespace douady
