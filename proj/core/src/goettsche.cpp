#include "douady/goettsche.hpp"

#include <algorithm>

#include "douady/error.hpp"

namespace douady {

namespace {

FactorFamily family(FactorFamily::Kind kind, Affine t, Affine x, Affine y, int weight,
                    std::optional<int> max_index = std::nullopt) {
  FactorFamily f;
  f.kind = kind;
  f.t_exp = t;
  f.x_exp = x;
  f.y_exp = y;
  f.weight = weight;
  f.max_index = max_index;
  return f;
}

void require_hodge(const SurfaceModel& s) {
  if (!s.has_hodge()) {
    throw Error(ErrorCode::MissingHodgeData, s.name() + " carries no Hodge numbers");
  }
}

// A block of `dim` basis vectors sharing one (bi)degree and parity.
struct GradedBlock {
  Exponents exponents;
  int dim;
  bool odd;
};

std::vector<GradedBlock> degree_blocks(const SurfaceModel& s) {
  std::vector<GradedBlock> out;
  for (int d = 0; d < 5; ++d) {
    const int b = s.betti()[static_cast<std::size_t>(d)];
    if (b > 0) out.push_back({{d, 0, 0}, b, d % 2 != 0});
  }
  return out;
}

std::vector<GradedBlock> hodge_blocks(const SurfaceModel& s) {
  require_hodge(s);
  std::vector<GradedBlock> out;
  for (const auto& [type, h] : *s.hodge()) {
    if (h > 0) out.push_back({{0, type.p, type.q}, h, (type.p + type.q) % 2 != 0});
  }
  return out;
}

// Graded dimension of the m-th super-symmetric power: distribute m slots over
// blocks; an even block of dim b filled k times contributes C(b+k-1, k)
// multisets, an odd block C(b, k) subsets.
void super_sym_into(const std::vector<GradedBlock>& blocks, std::size_t i, int remaining,
                    const Exponents& acc, const Integer& count, CoeffPoly& out) {
  if (i == blocks.size()) {
    if (remaining == 0) out.add_term(acc, Rational(count));
    return;
  }
  const auto& blk = blocks[i];
  const int kmax = blk.odd ? std::min(remaining, blk.dim) : remaining;
  for (int k = 0; k <= kmax; ++k) {
    const auto uk = static_cast<unsigned long>(k);
    Integer c = blk.odd ? binomial(blk.dim, uk) : multichoose(blk.dim, uk);
    Exponents e = acc;
    for (int v = 0; v < kNumVars; ++v) e[static_cast<std::size_t>(v)] += k * blk.exponents[static_cast<std::size_t>(v)];
    super_sym_into(blocks, i + 1, remaining - k, e, count * c, out);
  }
}

CoeffPoly super_sym(const std::vector<GradedBlock>& blocks, int m) {
  CoeffPoly out;
  if (m < 0) return out;
  super_sym_into(blocks, 0, m, {0, 0, 0}, Integer(1), out);
  return out;
}

CoeffPoly stratum_product(const std::vector<CoeffPoly>& table, const Partition& a) {
  CoeffPoly r(1);
  for (int ai : a.multiplicities()) {
    if (ai > 0) r = r * table[static_cast<std::size_t>(ai)];
  }
  return r;
}

}  // namespace

std::vector<FactorFamily> goettsche_families(const SurfaceModel& s) {
  using K = FactorFamily::Kind;
  const auto& b = s.betti();
  std::vector<FactorFamily> out;
  if (b[1]) out.push_back(family(K::Numerator, {2, -1}, {}, {}, b[1]));
  if (b[3]) out.push_back(family(K::Numerator, {2, 1}, {}, {}, b[3]));
  if (b[0]) out.push_back(family(K::Denominator, {2, -2}, {}, {}, b[0]));
  if (b[2]) out.push_back(family(K::Denominator, {2, 0}, {}, {}, b[2]));
  if (b[4]) out.push_back(family(K::Denominator, {2, 2}, {}, {}, b[4]));
  return out;
}

std::vector<FactorFamily> goettsche_hodge_families(const SurfaceModel& s) {
  require_hodge(s);
  using K = FactorFamily::Kind;
  std::vector<FactorFamily> out;
  for (const auto& [type, h] : *s.hodge()) {
    if (h == 0) continue;
    const bool odd = (type.p + type.q) % 2 != 0;
    out.push_back(family(odd ? K::Numerator : K::Denominator, {}, {1, type.p - 1},
                         {1, type.q - 1}, h));
  }
  return out;
}

QTSeries poincare_hilbert_product(const SurfaceModel& s, int order) {
  return product_expand(goettsche_families(s), order);
}

QTSeries hodge_hilbert_product(const SurfaceModel& s, int order) {
  return product_expand(goettsche_hodge_families(s), order);
}

CoeffPoly poincare_sym(const SurfaceModel& s, int m) { return super_sym(degree_blocks(s), m); }

std::vector<CoeffPoly> poincare_sym_table(const SurfaceModel& s, int max_m) {
  const auto blocks = degree_blocks(s);
  std::vector<CoeffPoly> table;
  for (int m = 0; m <= max_m; ++m) table.push_back(super_sym(blocks, m));
  return table;
}

CoeffPoly poincare_sym_product(const SurfaceModel& s, int m) {
  using K = FactorFamily::Kind;
  std::vector<FactorFamily> fams;
  for (int d = 0; d < 5; ++d) {
    const int b = s.betti()[static_cast<std::size_t>(d)];
    if (b == 0) continue;
    fams.push_back(family(d % 2 ? K::Numerator : K::Denominator, {0, d}, {}, {}, b, 1));
  }
  return product_expand(fams, m).coeff(m);
}

CoeffPoly hodge_sym(const SurfaceModel& s, int m) { return super_sym(hodge_blocks(s), m); }

CoeffPoly poincare_stratum_space(const SurfaceModel& s, const Partition& a) {
  int top = 0;
  for (int ai : a.multiplicities()) top = std::max(top, ai);
  return stratum_product(poincare_sym_table(s, top), a);
}

CoeffPoly decomposition_poincare(const SurfaceModel& s, int n) {
  const auto table = poincare_sym_table(s, n);
  CoeffPoly total;
  for (const auto& a : enumerate(n)) {
    total += CoeffPoly::t_power(2 * (n - a.length())) * stratum_product(table, a);
  }
  return total;
}

CoeffPoly poincare_punctual(int n) {
  CoeffPoly p;
  for (const auto& nu : enumerate(n)) p.add_term({2 * n - 2 * nu.length(), 0, 0}, 1);
  return p;
}

PunctualTopBetti punctual_top_betti(int n) {
  const CoeffPoly p = poincare_punctual(n);
  const int top = 2 * (n - 1);
  return {p.t_coefficient(top), p.max_exponent(Var::t) <= top};
}

Integer euler_hilbert(long e, int n) {
  using K = FactorFamily::Kind;
  if (e >= 0) {
    auto s = product_expand({family(K::Denominator, {}, {}, {}, static_cast<int>(e))}, n);
    return s.coeff(n).coefficient({0, 0, 0}).get_num();
  }
  // e < 0: an odd-degree numerator factor evaluated at t = -1.
  auto s = product_expand({family(K::Numerator, {2, -1}, {}, {}, static_cast<int>(-e))}, n);
  const CoeffPoly c = substitute(s.coeff(n), {{Var::t, Rational(-1)}});
  return c.coefficient({0, 0, 0}).get_num();
}

Integer orbifold_euler(long e, int n) {
  Integer total = 0;
  for (const auto& a : enumerate(n)) {
    Integer term = 1;
    for (int ai : a.multiplicities()) {
      if (ai > 0) term *= multichoose(Integer(e), static_cast<unsigned long>(ai));
    }
    total += term;
  }
  return total;
}

CoeffPoly hodge_hilbert(const SurfaceModel& s, int n) {
  const auto blocks = hodge_blocks(s);
  std::vector<CoeffPoly> table;
  for (int m = 0; m <= n; ++m) table.push_back(super_sym(blocks, m));
  CoeffPoly total;
  for (const auto& a : enumerate(n)) {
    const int shift = n - a.length();
    total += CoeffPoly::xy_power(shift, shift) * stratum_product(table, a);
  }
  return total;
}

Integer dim_equivariant_k(const SurfaceModel& s, int n) {
  const auto table = poincare_sym_table(s, n);
  Integer total = 0;
  for (const auto& a : enumerate(n)) {
    Integer term = 1;
    for (int ai : a.multiplicities()) {
      if (ai > 0) term *= table[static_cast<std::size_t>(ai)].sum_of_coefficients().get_num();
    }
    total += term;
  }
  return total;
}

}  // namespace douady
