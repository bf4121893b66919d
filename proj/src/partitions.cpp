#include "dt4/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "dt4/error.hpp"

namespace dt4 {

namespace {

void check_dim(int d) {
  if (d < 2 || d > 4) throw Error(ErrorKind::InvalidArgument, "partition dimension must be 2, 3 or 4");
}

void check_bound(int d, int n, const EnumerationBounds& bounds) {
  check_dim(d);
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "partition size must be nonnegative");
  if (n > bounds.for_dim(d))
    throw Error(ErrorKind::BoundExceeded, "n = " + std::to_string(n) + " exceeds the enumeration bound " +
                                              std::to_string(bounds.for_dim(d)) + " for d = " + std::to_string(d));
}

// Depth-first reverse search. A partition's canonical parent removes its
// lexicographically largest corner, so each partition is reached once.
class Walker {
 public:
  Walker(int d, int n_max) : d_(d), side_(n_max + 1) {
    std::size_t cells = 1;
    for (int i = 0; i < d_; ++i) cells *= static_cast<std::size_t>(side_);
    grid_.assign(cells, 0);
  }

  template <typename Visit>
  void run(int n_max, Visit&& visit) {
    walk(n_max, visit);
  }

 private:
  std::size_t index(const Box& b) const {
    std::size_t idx = 0;
    for (int i = 0; i < d_; ++i) idx = idx * static_cast<std::size_t>(side_) + static_cast<std::size_t>(b[static_cast<std::size_t>(i)]);
    return idx;
  }

  bool occupied(const Box& b) const {
    for (int i = 0; i < d_; ++i)
      if (b[static_cast<std::size_t>(i)] < 0 || b[static_cast<std::size_t>(i)] >= side_) return false;
    return grid_[index(b)] != 0;
  }

  bool is_corner(const Box& c) const {
    for (int i = 0; i < d_; ++i) {
      Box up = c;
      ++up[static_cast<std::size_t>(i)];
      if (occupied(up)) return false;
    }
    return true;
  }

  bool addable(const Box& b) const {
    if (occupied(b)) return false;
    for (int i = 0; i < d_; ++i) {
      if (b[static_cast<std::size_t>(i)] == 0) continue;
      Box down = b;
      --down[static_cast<std::size_t>(i)];
      if (!occupied(down)) return false;
    }
    return true;
  }

  template <typename Visit>
  void walk(int remaining, Visit& visit) {
    visit(boxes_);
    if (remaining == 0) return;
    std::set<Box> candidates;
    if (boxes_.empty()) candidates.insert(Box{0, 0, 0, 0});
    for (const Box& p : boxes_)
      for (int i = 0; i < d_; ++i) {
        Box q = p;
        ++q[static_cast<std::size_t>(i)];
        if (addable(q)) candidates.insert(q);
      }
    for (const Box& b : candidates) {
      grid_[index(b)] = 1;
      bool canonical = true;
      for (const Box& c : boxes_)
        if (c > b && is_corner(c)) {
          canonical = false;
          break;
        }
      if (canonical) {
        boxes_.push_back(b);
        walk(remaining - 1, visit);
        boxes_.pop_back();
      }
      grid_[index(b)] = 0;
    }
  }

  int d_;
  int side_;
  std::vector<char> grid_;
  std::vector<Box> boxes_;
};

}  // namespace

DPartition::DPartition(int dim, std::vector<Box> boxes) : dim_(dim), boxes_(std::move(boxes)) {
  check_dim(dim_);
  std::sort(boxes_.begin(), boxes_.end());
  if (std::adjacent_find(boxes_.begin(), boxes_.end()) != boxes_.end())
    throw Error(ErrorKind::InvalidArgument, "duplicate box in partition");
  if (!is_downward_closed(dim_, boxes_))
    throw Error(ErrorKind::InvalidArgument, "box set is not a downward-closed subset of N^" + std::to_string(dim_));
}

bool DPartition::contains(const Box& b) const { return std::binary_search(boxes_.begin(), boxes_.end(), b); }

DPartition DPartition::embedded(int new_dim) const {
  if (new_dim < dim_) throw Error(ErrorKind::InvalidArgument, "cannot embed into a smaller dimension");
  return DPartition(new_dim, boxes_);
}

DPartition DPartition::permuted(const std::array<int, 4>& perm) const {
  if (dim_ != 4) throw Error(ErrorKind::InvalidArgument, "coordinate permutation requires d = 4");
  std::vector<Box> out;
  for (const Box& b : boxes_) {
    Box q{0, 0, 0, 0};
    for (std::size_t i = 0; i < 4; ++i) q[static_cast<std::size_t>(perm[i])] = b[i];
    out.push_back(q);
  }
  return DPartition(4, std::move(out));
}

std::string DPartition::id() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t k = 0; k < boxes_.size(); ++k) {
    out << (k ? ",[" : "[");
    for (int i = 0; i < dim_; ++i) out << (i ? "," : "") << boxes_[k][static_cast<std::size_t>(i)];
    out << "]";
  }
  out << "]";
  return out.str();
}

bool is_downward_closed(int dim, const std::vector<Box>& boxes) {
  std::set<Box> set(boxes.begin(), boxes.end());
  for (const Box& b : boxes) {
    for (int i = 0; i < 4; ++i) {
      const int c = b[static_cast<std::size_t>(i)];
      if (c < 0 || (i >= dim && c != 0)) return false;
      if (c > 0) {
        Box down = b;
        --down[static_cast<std::size_t>(i)];
        if (!set.count(down)) return false;
      }
    }
  }
  return true;
}

EnumerationBounds EnumerationBounds::from_environment() {
  EnumerationBounds bounds;
  if (const char* env = std::getenv("DT4_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || v > 64)
      throw Error(ErrorKind::InvalidArgument, std::string("DT4_MAX_N must be an integer in 0..64, got '") + env + "'");
    bounds.max_n[4] = static_cast<int>(v);
  }
  return bounds;
}

std::vector<DPartition> enumerate(int d, int n, const EnumerationBounds& bounds) {
  check_bound(d, n, bounds);
  std::vector<DPartition> out;
  Walker walker(d, n);
  walker.run(n, [&](const std::vector<Box>& boxes) {
    if (static_cast<int>(boxes.size()) == n) out.emplace_back(d, boxes);
  });
  std::sort(out.begin(), out.end(),
            [](const DPartition& a, const DPartition& b) { return a.boxes() < b.boxes(); });
  return out;
}

std::vector<std::uint64_t> count_up_to(int d, int n_max, const EnumerationBounds& bounds) {
  check_bound(d, n_max, bounds);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n_max) + 1, 0);
  Walker walker(d, n_max);
  walker.run(n_max, [&](const std::vector<Box>& boxes) { ++counts[boxes.size()]; });
  return counts;
}

std::uint64_t count(int d, int n, const EnumerationBounds& bounds) {
  return count_up_to(d, n, bounds)[static_cast<std::size_t>(n)];
}

Laurent char_Q(const DPartition& p) {
  Laurent q;
  for (const Box& b : p.boxes()) q.add_term(b, 1);
  return q;
}

MonomialIdeal to_ideal(const DPartition& p) {
  MonomialIdeal ideal;
  ideal.dim = p.dim();
  std::set<ExpVec> gens;
  if (p.size() == 0) gens.insert({0, 0, 0, 0});
  for (const Box& b : p.boxes())
    for (int i = 0; i < p.dim(); ++i) {
      Box q = b;
      ++q[static_cast<std::size_t>(i)];
      if (p.contains(q)) continue;
      bool minimal = true;
      for (int j = 0; j < p.dim(); ++j) {
        if (q[static_cast<std::size_t>(j)] == 0) continue;
        Box down = q;
        --down[static_cast<std::size_t>(j)];
        if (!p.contains(down)) minimal = false;
      }
      if (minimal) gens.insert(q);
    }
  ideal.generators.assign(gens.begin(), gens.end());
  return ideal;
}

DPartition staircase_complement(const MonomialIdeal& ideal) {
  check_dim(ideal.dim);
  std::array<int, 4> extent{1, 1, 1, 1};
  for (int i = 0; i < ideal.dim; ++i) {
    int best = -1;
    for (const ExpVec& g : ideal.generators) {
      bool pure = true;
      for (int j = 0; j < 4; ++j)
        if (j != i && g[static_cast<std::size_t>(j)] != 0) pure = false;
      if (pure && (best < 0 || g[static_cast<std::size_t>(i)] < best)) best = g[static_cast<std::size_t>(i)];
    }
    if (best < 0) throw Error(ErrorKind::InvalidArgument, "monomial ideal does not have finite colength");
    extent[static_cast<std::size_t>(i)] = best;
  }
  std::vector<Box> boxes;
  for (int a = 0; a < extent[0]; ++a)
    for (int b = 0; b < extent[1]; ++b)
      for (int c = 0; c < extent[2]; ++c)
        for (int e = 0; e < extent[3]; ++e) {
          const Box p{a, b, c, e};
          const bool in_ideal = std::any_of(ideal.generators.begin(), ideal.generators.end(), [&](const ExpVec& g) {
            for (std::size_t i = 0; i < 4; ++i)
              if (g[i] > p[i]) return false;
            return true;
          });
          if (!in_ideal) boxes.push_back(p);
        }
  return DPartition(ideal.dim, std::move(boxes));
}

}  // namespace dt4
