#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "legkh/laurent.hpp"
#include "legkh/link_diagram.hpp"

namespace legkh {

struct HomologyGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// (i, j) -> group; only nonzero groups are stored.
struct BigradedTable {
  std::map<std::pair<int, int>, HomologyGroup> entries;

  bool empty() const { return entries.empty(); }
  HomologyGroup at(int i, int j) const;
  void set(int i, int j, HomologyGroup group);
  friend bool operator==(const BigradedTable&, const BigradedTable&) = default;
};

struct KhovanovOptions {
  int max_crossings = 14;
  bool check_d_squared = true;  // throws Error(ConventionError) on failure
  int threads = 0;              // 0: hardware concurrency
};

// Integral Khovanov homology from the cube of resolutions, with the usual
// normalization i = r - n_-, j = deg + r + n_+ - 2n_-. The 0-resolution of a
// crossing is its A-smoothing. Throws Error(TooLarge).
BigradedTable khovanov_homology(const LinkDiagram& diagram, const KhovanovOptions& options = {});

// Ranks of the chain groups in the same normalization.
BigradedTable chain_group_ranks(const LinkDiagram& diagram, int max_crossings = 14);

// True when every composite of consecutive cube differentials vanishes.
bool cube_differential_squares_to_zero(const LinkDiagram& diagram, int max_crossings = 14);

// Least j - i over nonzero groups (torsion counts). Throws Error(EmptyTable).
int min_delta(const BigradedTable& table);

// Sum of (-1)^i q^j times the free rank.
LaurentPoly graded_euler_characteristic(const BigradedTable& table);

// Unreduced Jones polynomial by the bracket state sum, normalized so that the
// unknot gives q + q^-1. Throws Error(TooLarge).
LaurentPoly kauffman_jones(const LinkDiagram& diagram, int max_crossings = 14);

}  // namespace legkh
