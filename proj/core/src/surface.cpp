#include "douady/surface.hpp"

#include "douady/error.hpp"

namespace douady {

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

[[noreturn]] void invalid(const std::string& name, const std::string& why) {
  throw Error(ErrorCode::InvalidSurface, name + ": " + why);
}

RationalMatrix identity(int n) {
  RationalMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

RationalMatrix empty_block(int rows, int cols) {
  return RationalMatrix(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols), 0));
}

// Block-diagonal sum.
RationalMatrix direct_sum(const std::vector<RationalMatrix>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  RationalMatrix out = empty_block(static_cast<int>(n), static_cast<int>(n));
  std::size_t at = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) out[at + i][at + j] = p[i][j];
    }
    at += p.size();
  }
  return out;
}

RationalMatrix hyperbolic_plane() { return {{0, 1}, {1, 0}}; }

RationalMatrix negative_e8() {
  // T_{2,3,5}: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
  RationalMatrix m = empty_block(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m[i][i] = -2;
  const std::pair<std::size_t, std::size_t> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                                       {4, 5}, {5, 6}, {4, 7}};
  for (auto [a, b] : edges) m[a][b] = m[b][a] = 1;
  return m;
}

}  // namespace

SurfaceModel::SurfaceModel(std::string name, BettiVector betti, BettiVector betti_c,
                           std::array<RationalMatrix, 5> pairing_blocks,
                           std::optional<HodgeNumbers> hodge)
    : name_(std::move(name)),
      betti_(betti),
      betti_c_(betti_c),
      blocks_(std::move(pairing_blocks)),
      hodge_(std::move(hodge)) {
  for (int d = 0; d < 5; ++d) {
    if (betti_[static_cast<std::size_t>(d)] < 0 || betti_c_[static_cast<std::size_t>(d)] < 0) {
      invalid(name_, "negative Betti number");
    }
  }
  for (int d = 0; d < 5; ++d) {
    const int rows = betti_[static_cast<std::size_t>(d)];
    const int cols = betti_c_[static_cast<std::size_t>(4 - d)];
    const auto& block = blocks_[static_cast<std::size_t>(d)];
    if (rows != cols) {
      invalid(name_, "pairing block for degree " + std::to_string(d) + " is " + std::to_string(rows) +
                         "x" + std::to_string(cols) + ", must be square");
    }
    if (block.size() != static_cast<std::size_t>(rows)) invalid(name_, "pairing block row count");
    for (const auto& row : block) {
      if (row.size() != static_cast<std::size_t>(cols)) invalid(name_, "pairing block column count");
    }
    if (rank(block) != static_cast<std::size_t>(rows)) {
      invalid(name_, "pairing block for degree " + std::to_string(d) + " is degenerate");
    }
  }

  if (hodge_) {
    for (const auto& [type, h] : *hodge_) {
      if (type.p < 0 || type.q < 0 || type.p > 2 || type.q > 2 || h < 0) {
        invalid(name_, "Hodge entry out of range");
      }
      auto mirror = hodge_->find(HodgeType{type.q, type.p});
      if (mirror == hodge_->end() || mirror->second != h) {
        invalid(name_, "Hodge numbers not symmetric at (" + std::to_string(type.p) + "," +
                           std::to_string(type.q) + ")");
      }
    }
    for (int d = 0; d < 5; ++d) {
      int sum = 0;
      for (const auto& [type, h] : *hodge_) {
        if (type.p + type.q == d) sum += h;
      }
      if (sum != betti_[static_cast<std::size_t>(d)]) {
        invalid(name_, "Hodge numbers do not sum to b_" + std::to_string(d));
      }
    }
  }

  for (int d = 0; d < 5; ++d) {
    if (hodge_) {
      for (int p = d; p >= 0; --p) {
        auto it = hodge_->find(HodgeType{p, d - p});
        if (it == hodge_->end()) continue;
        for (int k = 0; k < it->second; ++k) classes_.push_back({d, HodgeType{p, d - p}});
      }
    } else {
      for (int k = 0; k < betti_[static_cast<std::size_t>(d)]; ++k) classes_.push_back({d, std::nullopt});
    }
    for (int k = 0; k < betti_c_[static_cast<std::size_t>(d)]; ++k) compact_.push_back({d, std::nullopt});
  }

  full_pairing_ = empty_block(static_cast<int>(classes_.size()), static_cast<int>(compact_.size()));
  std::array<std::size_t, 5> ord_start{};
  std::array<std::size_t, 5> cpt_start{};
  for (int d = 1; d < 5; ++d) {
    ord_start[static_cast<std::size_t>(d)] =
        ord_start[static_cast<std::size_t>(d - 1)] + static_cast<std::size_t>(betti_[static_cast<std::size_t>(d - 1)]);
    cpt_start[static_cast<std::size_t>(d)] =
        cpt_start[static_cast<std::size_t>(d - 1)] + static_cast<std::size_t>(betti_c_[static_cast<std::size_t>(d - 1)]);
  }
  for (std::size_t d = 0; d < 5; ++d) {
    const auto& block = blocks_[d];
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block[i].size(); ++j) {
        full_pairing_[ord_start[d] + i][cpt_start[4 - d] + j] = block[i][j];
      }
    }
  }
}

SurfaceModel SurfaceModel::with_identity_pairing(std::string name, BettiVector betti,
                                                 BettiVector betti_c,
                                                 std::optional<HodgeNumbers> hodge) {
  std::array<RationalMatrix, 5> blocks;
  for (std::size_t d = 0; d < 5; ++d) {
    if (betti[d] < 0 || betti_c[d] < 0) invalid(name, "negative Betti number");
    if (betti[d] != betti_c[4 - d]) {
      invalid(name, "b_" + std::to_string(d) + " = " + std::to_string(betti[d]) + " but b^c_" +
                        std::to_string(4 - d) + " = " + std::to_string(betti_c[4 - d]));
    }
    blocks[d] = identity(betti[d]);
  }
  return SurfaceModel(std::move(name), betti, betti_c, std::move(blocks), std::move(hodge));
}

int SurfaceModel::total_betti() const noexcept {
  int s = 0;
  for (int b : betti_) s += b;
  return s;
}

int SurfaceModel::euler() const noexcept {
  return betti_[0] - betti_[1] + betti_[2] - betti_[3] + betti_[4];
}

int SurfaceModel::even_dim() const noexcept { return betti_[0] + betti_[2] + betti_[4]; }
int SurfaceModel::odd_dim() const noexcept { return betti_[1] + betti_[3]; }

const Rational& SurfaceModel::pairing(std::size_t alpha, std::size_t beta) const {
  if (alpha >= classes_.size() || beta >= compact_.size()) {
    throw Error(ErrorCode::UnknownClass, name_ + ": class index out of range");
  }
  return full_pairing_[alpha][beta];
}

namespace presets {

SurfaceModel delta() {
  std::array<RationalMatrix, 5> blocks{identity(1), {}, {}, {}, {}};
  return SurfaceModel("delta", {1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, std::move(blocks),
                      HodgeNumbers{{{0, 0}, 1}});
}

SurfaceModel p2() {
  return SurfaceModel::with_identity_pairing("p2", {1, 0, 1, 0, 1}, {1, 0, 1, 0, 1},
                                             HodgeNumbers{{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}});
}

SurfaceModel p1xp1() {
  std::array<RationalMatrix, 5> blocks{identity(1), {}, hyperbolic_plane(), {}, identity(1)};
  return SurfaceModel("p1xp1", {1, 0, 2, 0, 1}, {1, 0, 2, 0, 1}, std::move(blocks),
                      HodgeNumbers{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}});
}

SurfaceModel k3() {
  const auto u = hyperbolic_plane();
  std::array<RationalMatrix, 5> blocks{
      identity(1), {}, direct_sum({u, u, u, negative_e8(), negative_e8()}), {}, identity(1)};
  return SurfaceModel(
      "k3", {1, 0, 22, 0, 1}, {1, 0, 22, 0, 1}, std::move(blocks),
      HodgeNumbers{{{0, 0}, 1}, {{2, 0}, 1}, {{1, 1}, 20}, {{0, 2}, 1}, {{2, 2}, 1}});
}

SurfaceModel abelian() {
  const auto u = hyperbolic_plane();
  std::array<RationalMatrix, 5> blocks{identity(1), identity(4), direct_sum({u, u, u}),
                                       identity(4), identity(1)};
  return SurfaceModel("abelian", {1, 4, 6, 4, 1}, {1, 4, 6, 4, 1}, std::move(blocks),
                      HodgeNumbers{{{0, 0}, 1},
                                   {{1, 0}, 2},
                                   {{0, 1}, 2},
                                   {{2, 0}, 1},
                                   {{1, 1}, 4},
                                   {{0, 2}, 1},
                                   {{2, 1}, 2},
                                   {{1, 2}, 2},
                                   {{2, 2}, 1}});
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames{"delta", "p2", "p1xp1", "k3", "abelian"};
  return kNames;
}

std::optional<SurfaceModel> by_name(std::string_view name) {
  if (name == "delta" || name == "c2") return delta();
  if (name == "p2") return p2();
  if (name == "p1xp1") return p1xp1();
  if (name == "k3") return k3();
  if (name == "abelian") return abelian();
  return std::nullopt;
}

std::vector<SurfaceModel> all() { return {delta(), p2(), p1xp1(), k3(), abelian()}; }

}  // namespace presets

}  // namespace douady
