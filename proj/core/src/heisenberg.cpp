#include "douady/heisenberg.hpp"

#include <algorithm>
#include <sstream>

#include "douady/error.hpp"

namespace douady {

int FockMonomial::level() const noexcept {
  int l = 0;
  for (const auto& f : factors) l += f.mode;
  return l;
}

int FockMonomial::degree(const SurfaceModel& model) const {
  int d = 0;
  for (const auto& f : factors) {
    if (f.cls >= model.classes().size()) throw Error(ErrorCode::UnknownClass, "monomial class index");
    d += model.classes()[f.cls].degree + 2 * (f.mode - 1);
  }
  return d;
}

std::string FockMonomial::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (i) os << ' ';
    os << "p[" << factors[i].mode << ',' << factors[i].cls << ']';
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

FockState FockState::vacuum() { return single(FockMonomial{}); }

FockState FockState::single(FockMonomial m, const Rational& c) {
  FockState s;
  s.add(m, c);
  return s;
}

Rational FockState::coefficient(const FockMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FockState::add(const FockMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FockState& FockState::operator+=(const FockState& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

FockState& FockState::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string FockState::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Rational mag = abs(c);
    if (mag != 1 || m.factors.empty()) {
      os << mag.get_str();
      if (!m.factors.empty()) os << '*';
    }
    if (!m.factors.empty()) os << m.str();
  }
  return os.str();
}

bool HeisenbergOp::odd(const SurfaceModel& model) const {
  switch (kind) {
    case Kind::Central: return false;
    case Kind::Create:
      if (cls >= model.classes().size()) throw Error(ErrorCode::UnknownClass, str());
      return model.classes()[cls].odd();
    case Kind::Annihilate:
      if (cls >= model.compact_classes().size()) throw Error(ErrorCode::UnknownClass, str());
      return model.compact_classes()[cls].odd();
  }
  return false;
}

std::string HeisenbergOp::str() const {
  switch (kind) {
    case Kind::Central: return "c";
    case Kind::Create: return "P[" + std::to_string(mode) + "," + std::to_string(cls) + "]";
    case Kind::Annihilate: return "R[" + std::to_string(mode) + "," + std::to_string(cls) + "]";
  }
  return "?";
}

namespace {

void validate(const HeisenbergOp& op, const SurfaceModel& model) {
  if (op.kind == HeisenbergOp::Kind::Central) return;
  if (op.mode <= 0) {
    throw Error(ErrorCode::ModeNonPositive, op.str() + " has non-positive mode");
  }
  const std::size_t bound = op.kind == HeisenbergOp::Kind::Create ? model.classes().size()
                                                                   : model.compact_classes().size();
  if (op.cls >= bound) {
    throw Error(ErrorCode::UnknownClass, op.str() + " refers to a class outside " + model.name());
  }
}

bool factor_odd(const FockFactor& f, const SurfaceModel& model) {
  return model.classes()[f.cls].odd();
}

void create_into(const FockFactor& gen, const FockMonomial& m, const Rational& c,
                 const SurfaceModel& model, FockState& out) {
  const bool odd = model.classes()[gen.cls].odd();
  auto pos = std::lower_bound(m.factors.begin(), m.factors.end(), gen);
  if (odd && pos != m.factors.end() && *pos == gen) return;  // odd square
  bool negative = false;
  if (odd) {
    for (auto it = m.factors.begin(); it != pos; ++it) negative ^= factor_odd(*it, model);
  }
  FockMonomial result;
  result.factors.reserve(m.factors.size() + 1);
  result.factors.insert(result.factors.end(), m.factors.begin(), pos);
  result.factors.push_back(gen);
  result.factors.insert(result.factors.end(), pos, m.factors.end());
  out.add(result, negative ? Rational(-c) : c);
}

void annihilate_into(int mode, std::size_t beta, const FockMonomial& m, const Rational& c,
                     const SurfaceModel& model, FockState& out) {
  const bool beta_odd = model.compact_classes()[beta].odd();
  // (-1)^{mode-1} mode
  const Rational normalization = (mode % 2 == 1) ? Rational(mode) : Rational(-mode);
  bool passed_odd = false;  // parity of the factors to the left of position s
  for (std::size_t s = 0; s < m.factors.size(); ++s) {
    const auto& f = m.factors[s];
    if (f.mode == mode) {
      const Rational& pair = model.pairing(f.cls, beta);
      if (pair != 0) {
        FockMonomial rest;
        rest.factors.reserve(m.factors.size() - 1);
        rest.factors.insert(rest.factors.end(), m.factors.begin(), m.factors.begin() + static_cast<std::ptrdiff_t>(s));
        rest.factors.insert(rest.factors.end(), m.factors.begin() + static_cast<std::ptrdiff_t>(s) + 1, m.factors.end());
        Rational value = c * normalization * pair;
        if (beta_odd && passed_odd) value = -value;
        out.add(rest, value);
      }
    }
    passed_odd ^= factor_odd(f, model);
  }
}

}  // namespace

FockState apply(const HeisenbergOp& op, const FockState& st, const SurfaceModel& model) {
  validate(op, model);
  FockState out;
  switch (op.kind) {
    case HeisenbergOp::Kind::Central:
      return st;
    case HeisenbergOp::Kind::Create:
      for (const auto& [m, c] : st.terms()) create_into({op.mode, op.cls}, m, c, model, out);
      return out;
    case HeisenbergOp::Kind::Annihilate:
      for (const auto& [m, c] : st.terms()) annihilate_into(op.mode, op.cls, m, c, model, out);
      return out;
  }
  return out;
}

FockState commutator(const HeisenbergOp& op1, const HeisenbergOp& op2, const FockState& st,
                     const SurfaceModel& model) {
  FockState forward = apply(op1, apply(op2, st, model), model);
  FockState backward = apply(op2, apply(op1, st, model), model);
  if (op1.odd(model) && op2.odd(model)) return forward + backward;
  return forward - backward;
}

FockState expected_commutator(const HeisenbergOp& op1, const HeisenbergOp& op2,
                              const FockState& st, const SurfaceModel& model) {
  validate(op1, model);
  validate(op2, model);
  using K = HeisenbergOp::Kind;
  auto mixed = [&](const HeisenbergOp& r, const HeisenbergOp& p) -> Rational {
    if (r.mode != p.mode) return Rational(0);
    const Rational sign = (p.mode % 2 == 1) ? 1 : -1;
    return sign * p.mode * model.pairing(p.cls, r.cls);
  };
  if (op1.kind == K::Annihilate && op2.kind == K::Create) return st * mixed(op1, op2);
  if (op1.kind == K::Create && op2.kind == K::Annihilate) {
    // [P, R] = -(-1)^{|P||R|} [R, P]
    const bool both_odd = op1.odd(model) && op2.odd(model);
    return st * (both_odd ? mixed(op2, op1) : Rational(-mixed(op2, op1)));
  }
  return FockState{};
}

namespace {

struct Generator {
  int mode;
  std::size_t cls;
  int degree;
  bool odd;
};

std::vector<Generator> generators(const SurfaceModel& model, int max_mode) {
  std::vector<Generator> gens;
  for (int mode = 1; mode <= max_mode; ++mode) {
    for (std::size_t c = 0; c < model.classes().size(); ++c) {
      const auto& cl = model.classes()[c];
      gens.push_back({mode, c, cl.degree + 2 * (mode - 1), cl.odd()});
    }
  }
  return gens;
}

// Visits every monomial of level <= budget built from gens[first..] in
// canonical order; visit(level, degree) is called once per monomial.
template <typename Visit>
void walk(const std::vector<Generator>& gens, std::size_t first, int level, int degree, int budget,
          Visit& visit) {
  visit(level, degree);
  for (std::size_t g = first; g < gens.size(); ++g) {
    const auto& gen = gens[g];
    if (level + gen.mode > budget) break;  // gens sorted by mode
    walk(gens, gen.odd ? g + 1 : g, level + gen.mode, degree + gen.degree, budget, visit);
  }
}

void collect(const std::vector<Generator>& gens, std::size_t first, int remaining,
             std::vector<FockFactor>& prefix, std::vector<FockMonomial>& out) {
  if (remaining == 0) {
    out.push_back(FockMonomial{prefix});
    return;
  }
  for (std::size_t g = first; g < gens.size(); ++g) {
    const auto& gen = gens[g];
    if (gen.mode > remaining) break;
    prefix.push_back({gen.mode, gen.cls});
    collect(gens, gen.odd ? g + 1 : g, remaining - gen.mode, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

QTSeries graded_character(const SurfaceModel& model, int order) {
  const auto gens = generators(model, order);
  const int max_degree = 4 * std::max(order, 1) + 2;
  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(order) + 1,
                                             std::vector<long long>(static_cast<std::size_t>(max_degree) + 1, 0));
  auto visit = [&](int level, int degree) {
    ++counts[static_cast<std::size_t>(level)][static_cast<std::size_t>(degree)];
  };
  walk(gens, 0, 0, 0, order, visit);

  QTSeries s(order);
  for (int n = 0; n <= order; ++n) {
    for (int d = 0; d <= max_degree; ++d) {
      const long long c = counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
      if (c) s.coeff_mut(n).add_term({d, 0, 0}, Rational(Integer(std::to_string(c))));
    }
  }
  return s;
}

Integer level_dim(const SurfaceModel& model, int n) {
  if (n < 0) return 0;
  const auto gens = generators(model, n);
  long long count = 0;
  auto visit = [&](int level, int) { count += (level == n); };
  walk(gens, 0, 0, 0, n, visit);
  return Integer(std::to_string(count));
}

std::vector<FockMonomial> enumerate_level(const SurfaceModel& model, int n) {
  std::vector<FockMonomial> out;
  if (n < 0) return out;
  const auto gens = generators(model, n);
  std::vector<FockFactor> prefix;
  collect(gens, 0, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

FockMonomial random_monomial(const SurfaceModel& model, int level, std::mt19937_64& rng) {
  if (model.classes().empty() && level > 0) {
    throw Error(ErrorCode::WrongModel, model.name() + " has no ordinary classes");
  }
  std::uniform_int_distribution<std::size_t> pick_class(0, model.classes().empty() ? 0 : model.classes().size() - 1);
  while (true) {
    FockMonomial m;
    int remaining = level;
    while (remaining > 0) {
      std::uniform_int_distribution<int> pick_mode(1, remaining);
      m.factors.push_back({pick_mode(rng), pick_class(rng)});
      remaining -= m.factors.back().mode;
    }
    std::sort(m.factors.begin(), m.factors.end());
    bool odd_repeat = false;
    for (std::size_t k = 1; k < m.factors.size(); ++k) {
      odd_repeat |= m.factors[k] == m.factors[k - 1] && factor_odd(m.factors[k], model);
    }
    if (!odd_repeat) return m;
  }
}

FockState random_state(const SurfaceModel& model, int max_level, int terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_level(0, max_level);
  std::uniform_int_distribution<int> pick_num(-9, 9);
  std::uniform_int_distribution<int> pick_den(1, 4);
  FockState st;
  for (int k = 0; k < terms; ++k) {
    int num = 0;
    while (num == 0) num = pick_num(rng);
    Rational c(num, pick_den(rng));
    c.canonicalize();
    st.add(random_monomial(model, pick_level(rng), rng), c);
  }
  return st;
}

FockState stratum_class(const Partition& nu, const SurfaceModel& model) {
  if (model.classes().size() != 1 || model.classes()[0].degree != 0) {
    throw Error(ErrorCode::WrongModel,
                "stratum classes need a model with a single degree-0 class, " + model.name() +
                    " has " + std::to_string(model.classes().size()));
  }
  FockState st = FockState::vacuum();
  const auto& parts = nu.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    st = apply(HeisenbergOp::create(*it, 0), st, model);
  }
  Rational scale(Integer(1), a_factorial(nu));
  scale.canonicalize();
  return st * scale;
}

std::optional<int> degree_of(const FockState& st, const SurfaceModel& model) {
  std::optional<int> deg;
  for (const auto& [m, c] : st.terms()) {
    const int d = m.degree(model);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::optional<std::pair<int, int>> bidegree_of(const FockState& st, const SurfaceModel& model) {
  if (!model.has_hodge()) {
    throw Error(ErrorCode::MissingHodgeData, model.name() + " carries no Hodge numbers");
  }
  std::optional<std::pair<int, int>> deg;
  for (const auto& [m, c] : st.terms()) {
    std::pair<int, int> d{0, 0};
    for (const auto& f : m.factors) {
      const auto& type = *model.classes().at(f.cls).hodge;
      d.first += type.p + f.mode - 1;
      d.second += type.q + f.mode - 1;
    }
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

}  // namespace douady
