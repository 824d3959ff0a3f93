#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rbhopf/report.hpp"

namespace rbhopf {

/// Structural problems with a Cayley table, reported without constructing a
/// group. Empty report means the table presents a group.
Report validate_group_table(const std::vector<std::vector<int>>& cayley);

/// Finite group presented by its Cayley table. Construction validates the
/// table (rows/columns are permutations, associativity on all triples) and
/// derives the identity and inverses.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> names);

  int order() const { return static_cast<int>(cayley_.size()); }
  int mul(int a, int b) const;
  int inv(int a) const;
  int identity() const { return identity_; }
  const std::vector<std::vector<int>>& cayley() const { return cayley_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const;
  std::string label_string(int i) const { return name(i); }

  bool is_subgroup(const std::vector<int>& subset) const;

 private:
  void check_index(int i) const;

  std::vector<std::vector<int>> cayley_;
  std::vector<std::string> names_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

/// Total map G -> G given by its image array; no bijectivity assumed.
struct GroupMap {
  std::vector<int> image;
  bool operator==(const GroupMap&) const = default;
  bool operator<(const GroupMap& o) const { return image < o.image; }
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Checks B(g)B(h) = B( g B(g) h B(g)^{-1} ) on every pair.
Report check_rb_group(const FiniteGroup& g, const GroupMap& b);

/// Exhaustive search over all order^order maps with early pruning on the
/// pair identity. Results in lexicographic order of image arrays. Throws
/// BudgetExceeded when order > cap. workers = 0 picks a count from
/// RBHOPF_THREADS or hardware concurrency; the candidate space is
/// partitioned by the image of the first non-identity element and slices are
/// concatenated deterministically.
std::vector<GroupMap> enumerate_rb_group(const FiniteGroup& g, int cap = 8, int workers = 0);

/// g -> g^{-1} B(g^{-1}).
GroupMap tilde_group(const FiniteGroup& g, const GroupMap& b);

/// For an exact factorization G = G1 G2 with G1 inter G2 = {e}: the map
/// g1 g2 -> g2^{-1}. Verifies that both subsets are subgroups and that every
/// element factors uniquely; throws std::domain_error otherwise.
GroupMap split_rb_group(const FiniteGroup& g, const std::vector<int>& g1,
                        const std::vector<int>& g2);

/// The group on the same elements with product g*h = g B(g) h B(g)^{-1}.
/// The result passes full table validation; inverses equal B(g)^{-1} g^{-1} B(g).
FiniteGroup descendent_group(const FiniteGroup& g, const GroupMap& b);

}  // namespace rbhopf
