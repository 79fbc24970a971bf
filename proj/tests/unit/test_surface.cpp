#include <doctest.h>

#include <functional>

#include "douady/error.hpp"
#include "douady/surface.hpp"

using namespace douady;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("preset betti numbers") {
  CHECK(presets::delta().betti() == BettiVector{1, 0, 0, 0, 0});
  CHECK(presets::delta().betti_c() == BettiVector{0, 0, 0, 0, 1});
  CHECK(presets::p2().betti() == BettiVector{1, 0, 1, 0, 1});
  CHECK(presets::p1xp1().betti() == BettiVector{1, 0, 2, 0, 1});
  CHECK(presets::k3().betti() == BettiVector{1, 0, 22, 0, 1});
  CHECK(presets::abelian().betti() == BettiVector{1, 4, 6, 4, 1});
  CHECK(presets::k3().euler() == 24);
  CHECK(presets::abelian().euler() == 0);
  CHECK(presets::abelian().odd_dim() == 8);
  CHECK(presets::abelian().even_dim() == 8);
  CHECK(presets::k3().total_betti() == 24);
  for (const auto& s : presets::all()) {
    if (s.name() != "delta") CHECK(s.betti() == s.betti_c());
  }
}

TEST_CASE("preset lookup") {
  CHECK(presets::names().size() == 5);
  CHECK(presets::by_name("c2")->name() == "delta");
  CHECK(presets::by_name("k3").has_value());
  CHECK_FALSE(presets::by_name("enriques").has_value());
}

TEST_CASE("hodge data of presets") {
  const auto k3 = presets::k3();
  REQUIRE(k3.has_hodge());
  CHECK(k3.hodge()->at({2, 0}) == 1);
  CHECK(k3.hodge()->at({1, 1}) == 20);
  const auto ab = presets::abelian();
  REQUIRE(ab.has_hodge());
  CHECK(ab.hodge()->at({1, 0}) == 2);
  CHECK(ab.hodge()->at({1, 1}) == 4);
  CHECK(ab.hodge()->at({2, 1}) == 2);
}

TEST_CASE("classes and pairing") {
  const auto p2 = presets::p2();
  REQUIRE(p2.classes().size() == 3);
  CHECK(p2.classes()[0].degree == 0);
  CHECK(p2.classes()[2].degree == 4);
  CHECK(p2.pairing(0, 2) == 1);
  CHECK(p2.pairing(1, 1) == 1);
  CHECK(p2.pairing(0, 0) == 0);
  CHECK(code_of([&] { (void)p2.pairing(3, 0); }) == ErrorCode::UnknownClass);
  CHECK(code_of([&] { (void)p2.pairing(0, 9); }) == ErrorCode::UnknownClass);

  const auto d = presets::delta();
  REQUIRE(d.classes().size() == 1);
  REQUIRE(d.compact_classes().size() == 1);
  CHECK(d.compact_classes()[0].degree == 4);
  CHECK(d.pairing(0, 0) == 1);

  const auto ab = presets::abelian();
  int odd = 0;
  for (const auto& c : ab.classes()) odd += c.odd();
  CHECK(odd == 8);
  for (std::size_t i = 1; i < ab.classes().size(); ++i) {
    CHECK(ab.classes()[i - 1].degree <= ab.classes()[i].degree);
  }
}

TEST_CASE("every preset pairing is nondegenerate block by block") {
  for (const auto& s : presets::all()) {
    for (int d = 0; d <= 4; ++d) {
      const auto& block = s.pairing_block(d);
      CHECK(static_cast<int>(block.size()) == s.betti()[static_cast<std::size_t>(d)]);
      CHECK(rank(block) == block.size());
    }
  }
}

TEST_CASE("invalid surfaces") {
  std::array<RationalMatrix, 5> blocks;
  blocks[0] = {{Rational(1)}};
  blocks[2] = {{Rational(0)}};  // degenerate
  blocks[4] = {{Rational(1)}};
  CHECK(code_of([&] { SurfaceModel("bad", {1, 0, 1, 0, 1}, {1, 0, 1, 0, 1}, blocks); }) ==
        ErrorCode::InvalidSurface);
  blocks[2] = {{Rational(1), Rational(0)}};  // wrong shape
  CHECK(code_of([&] { SurfaceModel("bad", {1, 0, 1, 0, 1}, {1, 0, 1, 0, 1}, blocks); }) ==
        ErrorCode::InvalidSurface);
  CHECK(code_of([&] { SurfaceModel::with_identity_pairing("bad", {1, 0, 2, 0, 1}, {1, 0, 1, 0, 1}); }) ==
        ErrorCode::InvalidSurface);
  CHECK(code_of([&] { SurfaceModel::with_identity_pairing("neg", {1, -1, 0, -1, 1}, {1, -1, 0, -1, 1}); }) ==
        ErrorCode::InvalidSurface);

  HodgeNumbers asym{{{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}, {{2, 1}, 1}};
  CHECK(code_of([&] {
          SurfaceModel::with_identity_pairing("asym", {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, asym);
        }) == ErrorCode::InvalidSurface);
  HodgeNumbers wrong_sum{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};
  CHECK(code_of([&] {
          SurfaceModel::with_identity_pairing("sum", {1, 0, 1, 0, 1}, {1, 0, 1, 0, 1}, wrong_sum);
        }) == ErrorCode::InvalidSurface);
}
