#pragma once

#include <vector>

#include "dt4/laurent.hpp"
#include "dt4/partitions.hpp"

namespace dt4 {

enum class ExtSource {
  StructureSheaf,  // Ext^i(O_Z, O_Z)
  Ideal,           // Ext^i(I, O_Z)
};

struct TaylorOptions {
  int max_generators = 16;
  // Highest Ext degree to compute; -1 means all degrees 0..dim.
  int max_degree = -1;
};

// Characters of Ext^i(source, O_Z), i = 0..ideal.dim, computed from the
// Taylor resolution of the monomial ideal. Hom(S(-m), O_Z) is identified
// with O_Z shifted by -m, so a basis element (J, box b) of the cochain
// complex has multidegree b - lcm(J); cohomology is computed by exact rank
// computations one multidegree at a time. For a single point this gives
// char Ext^i(O_p, O_p) = e_i(t_1^-1, ..., t_d^-1).
//
// Throws Error(BoundExceeded) when the generator count exceeds the bound.
std::vector<Laurent> taylor_ext_oracle(const MonomialIdeal& ideal, ExtSource source,
                                       const TaylorOptions& options = {});

// sum_i (-1)^i char Ext^i.
Laurent alternating_sum(const std::vector<Laurent>& ext);

}  // namespace dt4
