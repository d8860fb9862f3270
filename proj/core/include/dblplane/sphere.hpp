#ifndef DBLPLANE_SPHERE_HPP
#define DBLPLANE_SPHERE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dblplane/group.hpp"

namespace dblplane {

enum class SphereKind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

std::string sphere_kind_name(SphereKind kind, unsigned n);

struct OrbitDesc {
  std::size_t id = 0;
  std::size_t size = 0;
  std::size_t stabilizer_order = 1;
  bool special = false;  // nontrivial stabilizer, geometrically pinned points
};

// A distinguished orbit together with its realization: the cyclic stabilizer
// of a base point and the induced permutation action of the whole group.
struct SpecialOrbit {
  OrbitDesc desc;
  std::vector<std::size_t> stabilizer;   // element indices, sorted
  std::size_t stab_generator = npos;     // generator of the stabilizer
  int alpha_sign = +1;  // which eigenvalue of the stabilizer sits at this orbit
  std::vector<Perm> action;              // one permutation per group element
};

struct ClassGeometry {
  std::size_t order = 1;       // m
  std::size_t rotation = 0;    // k, normalized to 1 <= k <= m/2, gcd(k,m)=1
  std::vector<std::size_t> fixed_count;  // fixed points per listed orbit
};

// Finite rotation group on the projective line: a faithful permutation model,
// the catalog of distinguished orbits, and per-class rotation data.  Free
// orbits are formal: generic position, trivial stabilizer, size |G|.
class SphericalGroup {
 public:
  SphericalGroup() = default;  // placeholder; use catalog()
  static SphericalGroup catalog(SphereKind kind, unsigned n = 0);

  SphereKind kind() const { return kind_; }
  unsigned n() const { return n_; }
  std::string name() const { return sphere_kind_name(kind_, n_); }

  const Group& group() const { return model_; }
  const std::vector<SpecialOrbit>& orbits() const { return orbits_; }
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  const ClassGeometry& geometry(std::size_t class_index) const {
    return geometry_[class_index];
  }

  std::size_t free_orbit_size() const { return model_.size(); }

 private:
  void finalize();  // classes, fixed counts, validation

  SphereKind kind_ = SphereKind::Cyclic;
  unsigned n_ = 1;
  Group model_;
  std::vector<SpecialOrbit> orbits_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<ClassGeometry> geometry_;
};

// Invariant branch configuration: a subset of the distinguished orbits plus a
// number of generic free orbits.
struct DeltaDivisor {
  std::vector<std::size_t> special_ids;
  std::size_t free_multiplicity = 0;

  friend bool operator==(const DeltaDivisor&, const DeltaDivisor&) = default;
};

std::size_t delta_degree(const SphericalGroup& sphere, const DeltaDivisor& delta);
std::string delta_description(const SphericalGroup& sphere, const DeltaDivisor& delta);

// All configurations of total degree `degree`: each special orbit at most
// once, free orbits with any multiplicity.
std::vector<DeltaDivisor> delta_candidates(const SphericalGroup& sphere,
                                           std::size_t degree);

// Permutation action of `group` on the cosets of the subgroup spanned by
// `subgroup_elements`, one permutation per group element.
std::vector<Perm> coset_action(const Group& group,
                               const std::vector<std::size_t>& subgroup_elements);

}  // namespace dblplane

#endif
