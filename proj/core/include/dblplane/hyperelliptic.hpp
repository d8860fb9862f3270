#ifndef DBLPLANE_HYPERELLIPTIC_HPP
#define DBLPLANE_HYPERELLIPTIC_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dblplane/rational.hpp"
#include "dblplane/sphere.hpp"

namespace dblplane {

// Raised when the branch configuration does not admit a sign character:
// exactly one fixed point of some class lies on the branch divisor.
struct character_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The sign character of a rotation class on the defining polynomial of the
// branch divisor: (-1)^(k*f) where k is the rotation number and f counts the
// free orbits of the class inside delta; the two fixed points contribute
// canceling eigenvalue factors when both lie in delta and make the value
// non-real when exactly one does.
int compute_lambda(const SphericalGroup& sphere, const DeltaDivisor& delta,
                   std::size_t class_index);

// Lift of a rotation to the double cover: base element index and a quarter-turn
// exponent mu (the automorphism rescales the fiber coordinate by i^mu).
struct LiftPair {
  std::size_t base = 0;
  unsigned mu = 0;  // 0..3, i^mu; mu^2 = lambda(base)
};

// One group orbit of points on the hyperelliptic curve with nontrivial
// geometry: either Weierstrass points over delta or fiber pairs over a
// pinned orbit off delta.
struct CurveOrbit {
  std::string base;                   // description of the underlying orbit
  bool weierstrass = false;           // lies over the branch divisor
  std::vector<std::size_t> stabilizer;  // element indices in the lifted group
  std::size_t size = 0;               // orbit size on the curve
};

// The hyperelliptic side of a candidate: genus d-1 curve F with branch
// divisor delta, the lifted automorphism group of order 2|Gbar| realized as
// pairs (base, mu), the fixed-point table of every lift, and a chosen
// subgroup G surjecting onto Gbar.
class HyperellipticSetup {
 public:
  HyperellipticSetup() = default;  // placeholder; use make()
  static HyperellipticSetup make(SphericalGroup sphere, std::size_t d,
                                 DeltaDivisor delta);

  const SphericalGroup& sphere() const { return sphere_; }
  std::size_t d() const { return d_; }
  std::size_t genus_F() const { return d_ - 1; }
  const DeltaDivisor& delta() const { return delta_; }
  int lambda(std::size_t class_index) const { return lambda_[class_index]; }
  bool lambda_trivial() const;

  const Group& lifted_group() const { return g0_; }
  const LiftPair& pair(std::size_t element) const { return pairs_[element]; }
  std::size_t pair_index(std::size_t base, unsigned mu) const;
  std::size_t tau() const { return tau_; }
  std::size_t project(std::size_t element) const { return proj_[element]; }

  // Subgroups of the lifted group surjecting onto the base rotation group,
  // full group first, then the sections.
  std::vector<std::vector<std::size_t>> surjecting() const;
  HyperellipticSetup with_group(std::vector<std::size_t> group_indices) const;
  const std::vector<std::size_t>& group_indices() const { return group_; }
  Group chosen_group() const;
  bool tau_in_group() const;

  std::vector<CurveOrbit> point_census() const;

 private:
  SphericalGroup sphere_;
  std::size_t d_ = 4;
  DeltaDivisor delta_;
  std::vector<int> lambda_;                 // per base class
  Group g0_;
  std::vector<LiftPair> pairs_;             // per lifted element
  std::vector<std::size_t> pair_lookup_;    // base*4+mu -> element or npos
  std::size_t tau_ = npos;
  std::vector<std::size_t> proj_;
  std::vector<long long> fixed_;            // fixed points on F; identity slot -1
  std::vector<std::size_t> group_;          // chosen subgroup, sorted indices

  friend std::size_t fixed_points_on_F(const HyperellipticSetup&, std::size_t);
};

std::size_t fixed_points_on_F(const HyperellipticSetup& setup, std::size_t element);

// Elements of the chosen subgroup (identity excluded) with fixed points on F.
std::vector<std::size_t> set_A(const HyperellipticSetup& setup);
// Order-2 elements of the chosen subgroup acting freely on F.
std::vector<std::size_t> free_involutions(const HyperellipticSetup& setup);

// Branch orders of F -> F/G0, sorted, verified against Riemann-Hurwitz.
std::vector<std::size_t> quotient_signature_F(const HyperellipticSetup& setup);
// Same for the chosen subgroup.
std::vector<std::size_t> quotient_signature_chosen(const HyperellipticSetup& setup);
// Genus of F/G for the chosen subgroup.
long long quotient_genus_chosen(const HyperellipticSetup& setup);

// Zero locus of x0^{2n} + c x0^n x1^n + x1^{2n} is a free dihedral orbit of
// size 2n exactly when c avoids +-2.
bool is_free_dihedral_orbit(unsigned n, const Rat& c);

}  // namespace dblplane

#endif
