#ifndef DBLPLANE_COVERS_HPP
#define DBLPLANE_COVERS_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "dblplane/group.hpp"

namespace dblplane {

// A Galois cover of the line encoded by its branch monodromies: an ordered
// tuple of nontrivial elements with product one that generates the group.
struct BranchDatum {
  Group group;
  std::vector<std::size_t> monodromy;  // element indices
};

BranchDatum make_branch_datum(Group group, std::vector<std::size_t> monodromy);

// Genus from branch orders; throws unless the result is a nonnegative integer.
long long hurwitz_genus(const Group& group, const std::vector<std::size_t>& orders);
long long datum_genus(const BranchDatum& datum);

// Depth-first search for a monodromy tuple of length r drawn from `allowed`
// (conjugation-closed, identity excluded).  Deterministic: returns the
// lexicographically least solution, with the first entry reduced to class
// minima.  Absence is a value, not an error.
std::optional<std::vector<std::size_t>> find_generating_vector(
    const Group& group, std::vector<std::size_t> allowed, std::size_t r);

// Same search with a fixed multiset of conjugacy classes (one entry per
// branch point).
std::optional<std::vector<std::size_t>> find_generating_vector_in_classes(
    const Group& group, const std::vector<std::size_t>& class_of_entry);

// All solutions up to `limit`, for cross-checking invariance properties.
std::vector<std::vector<std::size_t>> find_generating_vectors(
    const Group& group, std::vector<std::size_t> allowed, std::size_t r,
    std::size_t limit);

// Fixed points of a nontrivial element on the covering curve.
std::size_t fixed_points_on_C(const BranchDatum& datum, std::size_t element);

// Class index (in canonical class order) of each monodromy entry.
std::vector<std::size_t> monodromy_classes(const BranchDatum& datum);

// A random datum over the given group, for property tests; entries may have
// any order >= 2.
std::optional<BranchDatum> random_branch_datum(const Group& group,
                                               std::mt19937_64& rng);

inline constexpr std::size_t kGeneratingVectorCap = 8;

}  // namespace dblplane

#endif
