#ifndef DBLPLANE_GROUP_HPP
#define DBLPLANE_GROUP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dblplane/perm.hpp"

namespace dblplane {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct order_bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite permutation group held by full element enumeration, elements in
// lexicographic order on image sequences (so the identity sits at index 0).
class Group {
 public:
  Group() : elements_{Perm(1)} {}  // the trivial group
  static constexpr std::size_t kDefaultOrderBound = 1000;

  static Group from_generators(std::size_t degree, std::vector<Perm> generators,
                               std::size_t order_bound = kDefaultOrderBound,
                               std::string name = "");
  // Elements must already be closed under products and contain the identity.
  static Group from_elements(std::size_t degree, std::vector<Perm> elements,
                             std::string name = "");

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::string& name() const { return name_; }

  std::size_t identity_index() const { return 0; }
  std::optional<std::size_t> find(const Perm& p) const;
  std::size_t index_of(const Perm& p) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse_of(std::size_t a) const;
  std::size_t conjugate(std::size_t g, std::size_t x) const;  // x g x^-1
  std::size_t element_order(std::size_t a) const;

  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
  std::vector<std::size_t> class_of_element() const;  // element -> class id

  // Closure of the given elements inside this group, as sorted indices.
  std::vector<std::size_t> subgroup_closure(std::vector<std::size_t> seed) const;
  bool is_generating(const std::vector<std::size_t>& elems) const;
  Group subgroup(const std::vector<std::size_t>& closed_indices,
                 std::string name = "") const;
  std::vector<std::size_t> cyclic_subgroup(std::size_t g) const;

  bool is_abelian() const;
  std::map<std::size_t, std::size_t> order_histogram() const;

 private:
  std::size_t degree_ = 1;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::string name_;
};

Group direct_product(const Group& a, const Group& b, std::string name = "");

struct IsoSignature {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<std::pair<std::size_t, std::size_t>> histogram;  // (order, count)

  friend bool operator==(const IsoSignature&, const IsoSignature&) = default;
  friend bool operator<(const IsoSignature& a, const IsoSignature& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.abelian != b.abelian) return a.abelian < b.abelian;
    return a.histogram < b.histogram;
  }
};

IsoSignature iso_signature(const Group& g);
bool is_isomorphic(const Group& a, const Group& b);

// Subgroups of g0 mapping onto the whole image of `projection`: the full
// group plus every section-image.  `projection` sends each element index of
// g0 to an element index of the image group; its kernel must be generated by
// a central involution.
std::vector<std::vector<std::size_t>> surjecting_subgroups(
    const Group& g0, const std::vector<std::size_t>& projection,
    const Group& image);

}  // namespace dblplane

#endif
