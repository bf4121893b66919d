#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dt4/laurent.hpp"

namespace dt4 {

// Lattice point of N^d, padded with zeros to four coordinates.
using Box = std::array<int, 4>;

// Finite downward-closed subset of N^d, d in {2, 3, 4}; boxes sorted
// lexicographically.
class DPartition {
 public:
  DPartition(int dim, std::vector<Box> boxes);  // validates
  static DPartition empty(int dim) { return DPartition(dim, {}); }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool contains(const Box& b) const;

  // Same boxes viewed in N^4.
  DPartition embedded(int new_dim) const;
  // Coordinates permuted: new[perm[i]] = old[i]; requires dim 4.
  DPartition permuted(const std::array<int, 4>& perm) const;

  // Compact JSON of the box list, e.g. "[[0,0,0,0],[1,0,0,0]]".
  std::string id() const;

  friend auto operator<=>(const DPartition&, const DPartition&) = default;

 private:
  int dim_;
  std::vector<Box> boxes_;
};

bool is_downward_closed(int dim, const std::vector<Box>& boxes);

// Enumeration bounds per dimension (index = d); DT4_MAX_N overrides d = 4.
struct EnumerationBounds {
  std::array<int, 5> max_n{0, 0, 60, 20, 8};
  static EnumerationBounds from_environment();
  int for_dim(int d) const { return max_n.at(static_cast<std::size_t>(d)); }
};

// All d-partitions of size n in lexicographic order of their box lists.
// Throws Error(BoundExceeded) above the bound, Error(InvalidArgument) for
// d outside {2,3,4}.
std::vector<DPartition> enumerate(int d, int n, const EnumerationBounds& bounds = EnumerationBounds::from_environment());

std::uint64_t count(int d, int n, const EnumerationBounds& bounds = EnumerationBounds::from_environment());
// count(d, k) for k = 0..n_max in a single traversal.
std::vector<std::uint64_t> count_up_to(int d, int n_max,
                                       const EnumerationBounds& bounds = EnumerationBounds::from_environment());

// sum over boxes of t^box.
Laurent char_Q(const DPartition& p);

struct MonomialIdeal {
  int dim = 4;
  std::vector<ExpVec> generators;  // minimal, sorted
};

MonomialIdeal to_ideal(const DPartition& p);
// Boxes outside the ideal; throws Error(InvalidArgument) if the colength is
// not finite.
DPartition staircase_complement(const MonomialIdeal& ideal);

}  // namespace dt4
