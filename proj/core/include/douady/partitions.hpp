#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "douady/rational.hpp"

namespace douady {

// A partition of n, held simultaneously in nu-notation (weakly decreasing
// parts) and a-notation (a[i-1] = number of parts equal to i, dense, length n).
class Partition {
 public:
  Partition() = default;  // the empty partition of 0

  // Parts in any order; they are sorted into weakly decreasing order.
  // Throws InvalidPartition on a non-positive part.
  static Partition from_parts(std::vector<int> parts);
  // Multiplicity vector (a_1, ..., a_m); trailing zeros are allowed and the
  // stored vector is padded or trimmed to length n.
  static Partition from_multiplicities(std::span<const int> a);

  int weight() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(nu_.size()); }
  const std::vector<int>& parts() const noexcept { return nu_; }
  const std::vector<int>& multiplicities() const noexcept { return a_; }
  // a_i for 1 <= i; zero beyond n.
  int multiplicity(int i) const noexcept;

  std::string str() const;  // "(3,1,1)", "()" for the empty partition

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> nu_;
  std::vector<int> a_;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Strict order used by enumerate(): descending lexicographic on parts, so
// (4) comes before (3,1), which comes before (2,2).
bool enumeration_before(const Partition& lhs, const Partition& rhs);

// A tuple (b_1, ..., b_k) with b_j a partition of nu_j for a host partition nu.
struct PartitionTuple {
  Partition host;
  std::vector<Partition> parts;

  int total_length() const noexcept;
  std::string str() const;
  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
};

// Every partition of n once, descending lexicographic in nu-notation.
std::vector<Partition> enumerate(int n);

// prod_i a_i!
Integer a_factorial(const Partition& p);

// True iff the parts of finer can be grouped into length(coarser) blocks with
// block j summing to coarser.parts()[j]. Throws MismatchedWeight.
bool stratum_geq(const Partition& finer, const Partition& coarser);

// The partition of n whose a-vector is the sum of the a-vectors of the b_j.
Partition u_map(const PartitionTuple& beta);

// All tuples in prod_j P(nu_j), in lexicographic order of the enumerations.
std::vector<PartitionTuple> all_tuples(const Partition& nu);

// u_map^{-1}(a) inside prod_j P(nu_j). Throws MismatchedWeight.
std::vector<PartitionTuple> fiber_S_a(const Partition& a, const Partition& nu);

// Tuples whose total length is n - h.
std::vector<PartitionTuple> fiber_S_h(int h, const Partition& nu);

std::int64_t count_by_length(int n, int length);

}  // namespace douady
