#include "dt4/taylor.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <utility>

#include "dt4/error.hpp"

namespace dt4 {

namespace {

using Mask = std::uint32_t;

// One graded piece of the cochain complex: basis elements (subset, box)
// grouped by multidegree.
struct Cochains {
  std::map<ExpVec, std::vector<std::pair<Mask, Box>>> by_degree;
};

int rank_of(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t n_rows = rows.size();
  if (n_rows == 0) return 0;
  const std::size_t n_cols = rows.front().size();
  for (std::size_t col = 0; col < n_cols && static_cast<std::size_t>(rank) < n_rows; ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < n_rows && rows[pivot][col] == 0) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < n_rows; ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / prow[col];
      for (std::size_t c = col; c < n_cols; ++c) rows[r][c] -= f * prow[c];
    }
    ++rank;
  }
  return rank;
}

class TaylorComplex {
 public:
  TaylorComplex(const MonomialIdeal& ideal, const DPartition& quotient)
      : gens_(ideal.generators), quotient_(quotient) {
    const std::size_t r = gens_.size();
    lcm_.assign(std::size_t{1} << r, ExpVec{0, 0, 0, 0});
    for (Mask m = 1; m < (Mask{1} << r); ++m) {
      const int low = std::countr_zero(m);
      const ExpVec& prev = lcm_[m & (m - 1)];
      const ExpVec& g = gens_[static_cast<std::size_t>(low)];
      for (std::size_t i = 0; i < 4; ++i) lcm_[m][i] = std::max(prev[i], g[i]);
    }
  }

  // Cochains Hom(F_k, O_Z) where F_k has basis e_J, |J| = k.
  Cochains cochains(int k) const {
    Cochains c;
    if (k < 0 || k > static_cast<int>(gens_.size())) return c;
    for (Mask m = 0; m < (Mask{1} << gens_.size()); ++m) {
      if (std::popcount(m) != k) continue;
      for (const Box& b : quotient_.boxes()) c.by_degree[b - lcm_[m]].emplace_back(m, b);
    }
    return c;
  }

  // Rank of the coboundary C^k_a -> C^{k+1}_a at multidegree a.
  int coboundary_rank(const Cochains& source, const Cochains& target, const ExpVec& a) const {
    auto src = source.by_degree.find(a);
    auto tgt = target.by_degree.find(a);
    if (src == source.by_degree.end() || tgt == target.by_degree.end()) return 0;
    std::map<std::pair<Mask, Box>, std::size_t> row_of;
    for (std::size_t i = 0; i < tgt->second.size(); ++i) row_of.emplace(tgt->second[i], i);
    std::vector<std::vector<Rational>> rows(tgt->second.size(), std::vector<Rational>(src->second.size()));
    for (std::size_t col = 0; col < src->second.size(); ++col) {
      const auto& [mask, box] = src->second[col];
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        const Mask bit = Mask{1} << j;
        if (mask & bit) continue;
        const Mask bigger = mask | bit;
        const Box shifted = box + (lcm_[bigger] - lcm_[mask]);
        if (!quotient_.contains(shifted)) continue;
        const int position = std::popcount(mask & (bit - 1));
        auto it = row_of.find({bigger, shifted});
        if (it == row_of.end()) throw Error(ErrorKind::InternalInconsistency, "Taylor coboundary left its multidegree");
        rows[it->second][col] += position % 2 ? -1 : 1;
      }
    }
    return rank_of(std::move(rows));
  }

 private:
  std::vector<ExpVec> gens_;
  const DPartition& quotient_;
  std::vector<ExpVec> lcm_;
};

}  // namespace

std::vector<Laurent> taylor_ext_oracle(const MonomialIdeal& ideal, ExtSource source, const TaylorOptions& options) {
  const int r = static_cast<int>(ideal.generators.size());
  if (r > options.max_generators || r > 24)
    throw Error(ErrorKind::BoundExceeded,
                "Taylor complex with " + std::to_string(r) + " generators exceeds the bound " +
                    std::to_string(options.max_generators));
  const DPartition quotient = staircase_complement(ideal);
  const int top = options.max_degree < 0 ? ideal.dim : std::min(options.max_degree, ideal.dim);
  // Ext^i(O_Z, -) is H^i of the full complex; Ext^i(I, -) shifts by one.
  const int shift = source == ExtSource::Ideal ? 1 : 0;

  TaylorComplex complex(ideal, quotient);
  std::vector<Laurent> ext(static_cast<std::size_t>(ideal.dim) + 1);
  Cochains prev;
  Cochains cur = complex.cochains(shift);
  for (int i = 0; i <= top; ++i) {
    const int k = i + shift;
    Cochains next = complex.cochains(k + 1);
    for (const auto& [a, basis] : cur.by_degree) {
      const int dim = static_cast<int>(basis.size());
      const int out_rank = complex.coboundary_rank(cur, next, a);
      // For the ideal source the degree-0 cochains (J empty) are absent.
      const int in_rank = (i == 0) ? 0 : complex.coboundary_rank(prev, cur, a);
      const int h = dim - out_rank - in_rank;
      if (h < 0) throw Error(ErrorKind::InternalInconsistency, "negative cohomology dimension");
      ext[static_cast<std::size_t>(i)].add_term(a, h);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return ext;
}

Laurent alternating_sum(const std::vector<Laurent>& ext) {
  Laurent out;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    if (i % 2)
      out -= ext[i];
    else
      out += ext[i];
  }
  return out;
}

}  // namespace dt4
