#include "douady/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "douady/error.hpp"

namespace douady {

Partition Partition::from_parts(std::vector<int> parts) {
  for (int p : parts) {
    if (p <= 0) {
      throw Error(ErrorCode::InvalidPartition, "parts must be positive, got " + std::to_string(p));
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Partition out;
  out.n_ = std::accumulate(parts.begin(), parts.end(), 0);
  out.a_.assign(static_cast<std::size_t>(out.n_), 0);
  for (int p : parts) ++out.a_[static_cast<std::size_t>(p - 1)];
  out.nu_ = std::move(parts);
  return out;
}

Partition Partition::from_multiplicities(std::span<const int> a) {
  std::vector<int> parts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) {
      throw Error(ErrorCode::InvalidPartition, "negative multiplicity");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(a[i]), static_cast<int>(i + 1));
  }
  return from_parts(std::move(parts));
}

int Partition::multiplicity(int i) const noexcept {
  if (i < 1 || i > n_) return 0;
  return a_[static_cast<std::size_t>(i - 1)];
}

std::string Partition::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  return os << ')';
}

bool enumeration_before(const Partition& lhs, const Partition& rhs) {
  return std::lexicographical_compare(lhs.parts().begin(), lhs.parts().end(), rhs.parts().begin(),
                                      rhs.parts().end(), std::greater<>());
}

int PartitionTuple::total_length() const noexcept {
  int l = 0;
  for (const auto& b : parts) l += b.length();
  return l;
}

std::string PartitionTuple::str() const {
  std::string s = "(";
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (j) s += ',';
    s += parts[j].str();
  }
  return s + ")";
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(prefix));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

void require_same_weight(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) {
    throw Error(ErrorCode::MismatchedWeight,
                a.str() + " has weight " + std::to_string(a.weight()) + ", " + b.str() +
                    " has weight " + std::to_string(b.weight()));
  }
}

// Multiset-splitting search for stratum_geq. `counts[v]` is the number of
// unused parts of value v; targets are consumed left to right.
class Splitter {
 public:
  Splitter(const Partition& finer, const Partition& coarser)
      : targets_(coarser.parts()), counts_(static_cast<std::size_t>(finer.weight()) + 1, 0) {
    for (int p : finer.parts()) ++counts_[static_cast<std::size_t>(p)];
  }

  bool run() { return solve(0); }

 private:
  bool solve(std::size_t j) {
    if (j == targets_.size()) return true;
    if (dead_.contains(counts_)) return false;
    bool ok = fill(j, targets_[j], static_cast<int>(counts_.size()) - 1);
    if (!ok) dead_.insert(counts_);
    return ok;
  }

  // Choose a sub-multiset of values <= max_value summing to `need`, then recurse.
  bool fill(std::size_t j, int need, int max_value) {
    if (need == 0) return solve(j + 1);
    for (int v = std::min(need, max_value); v >= 1; --v) {
      auto& c = counts_[static_cast<std::size_t>(v)];
      if (c == 0) continue;
      --c;
      bool ok = fill(j, need - v, v);
      ++c;
      if (ok) return true;
    }
    return false;
  }

  const std::vector<int>& targets_;
  std::vector<int> counts_;
  std::set<std::vector<int>> dead_;
};

}  // namespace

std::vector<Partition> enumerate(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

Integer a_factorial(const Partition& p) {
  Integer r = 1;
  for (int ai : p.multiplicities()) r *= factorial(static_cast<unsigned long>(ai));
  return r;
}

bool stratum_geq(const Partition& finer, const Partition& coarser) {
  require_same_weight(finer, coarser);
  if (finer.length() < coarser.length()) return false;
  return Splitter(finer, coarser).run();
}

Partition u_map(const PartitionTuple& beta) {
  std::vector<int> a(static_cast<std::size_t>(beta.host.weight()), 0);
  for (const auto& b : beta.parts) {
    const auto& bm = b.multiplicities();
    if (bm.size() > a.size()) a.resize(bm.size(), 0);
    for (std::size_t i = 0; i < bm.size(); ++i) a[i] += bm[i];
  }
  return Partition::from_multiplicities(a);
}

std::vector<PartitionTuple> all_tuples(const Partition& nu) {
  std::vector<std::vector<Partition>> factors;
  factors.reserve(nu.parts().size());
  for (int part : nu.parts()) factors.push_back(enumerate(part));

  std::vector<PartitionTuple> out;
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    PartitionTuple t{nu, {}};
    t.parts.reserve(factors.size());
    for (std::size_t j = 0; j < factors.size(); ++j) t.parts.push_back(factors[j][idx[j]]);
    out.push_back(std::move(t));
    // odometer, last factor fastest
    std::size_t j = factors.size();
    while (j > 0) {
      --j;
      if (++idx[j] < factors[j].size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
    if (factors.empty()) return out;
  }
}

std::vector<PartitionTuple> fiber_S_a(const Partition& a, const Partition& nu) {
  require_same_weight(a, nu);
  std::vector<PartitionTuple> out;
  if (!stratum_geq(a, nu)) return out;
  for (auto& t : all_tuples(nu)) {
    if (u_map(t) == a) out.push_back(std::move(t));
  }
  return out;
}

std::vector<PartitionTuple> fiber_S_h(int h, const Partition& nu) {
  std::vector<PartitionTuple> out;
  const int want = nu.weight() - h;
  if (h < 0 || want < nu.length()) return out;
  for (auto& t : all_tuples(nu)) {
    if (t.total_length() == want) out.push_back(std::move(t));
  }
  return out;
}

std::int64_t count_by_length(int n, int length) {
  std::int64_t c = 0;
  for (const auto& p : enumerate(n)) c += (p.length() == length);
  return c;
}

}  // namespace douady
