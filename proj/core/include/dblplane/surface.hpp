#ifndef DBLPLANE_SURFACE_HPP
#define DBLPLANE_SURFACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dblplane/covers.hpp"
#include "dblplane/hyperelliptic.hpp"

namespace dblplane {

struct Invariants {
  long long chi = 0;
  long long q = 0;
  long long pg = 0;
  long long ksq = 0;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

enum class SigmaBehavior { PointwiseFixed, InvariantIsolated, SwappedPair };

std::string sigma_behavior_name(SigmaBehavior b);

struct FibreInfo {
  std::size_t multiplicity = 1;
  SigmaBehavior behavior = SigmaBehavior::PointwiseFixed;
  std::size_t isolated = 0;  // isolated fixed points carried by the fibre
};

// Where a record came from in the search, enough to rebuild it.
struct Provenance {
  SphereKind kind = SphereKind::Cyclic;
  unsigned n = 0;
  std::size_t d = 4;
  DeltaDivisor delta;
  std::size_t group_selector = 0;  // 0 = full lifted group, k = k-th section
  std::vector<std::size_t> monodromy_class_ids;  // classes in the chosen group
};

struct SurfaceRecord {
  HyperellipticSetup setup;
  BranchDatum datum;
  std::vector<std::size_t> a_set;  // elements not free on F (lifted indices)
  std::vector<std::size_t> b_set;  // elements not free on C (lifted indices)
  Invariants invariants;
  std::size_t isolated_k = 0;
  std::vector<FibreInfo> fibres;
  std::string type_tag = "unclassified";
  Provenance provenance;
};

// True when no nontrivial element fixes points on both curves.
bool check_free_diagonal(const HyperellipticSetup& setup, const BranchDatum& datum);

// chi = (g(F)-1)(g(C)-1)/|G|, q = g(F/G), pg = chi - 1 + q, K^2 = 8 chi.
Invariants surface_invariants(const HyperellipticSetup& setup,
                              const BranchDatum& datum);

// Isolated fixed points of the involution induced by tau x id.
std::size_t count_sigma_isolated(const HyperellipticSetup& setup,
                                 const BranchDatum& datum);

// Multiple fibres of the pencil over F/G with the involution's behavior on
// each; isolated point placements are filled in from the branch datum.
std::vector<FibreInfo> multiple_fibres_p1(const HyperellipticSetup& setup,
                                          const BranchDatum& datum);

SurfaceRecord make_record(HyperellipticSetup setup, BranchDatum datum,
                          Provenance provenance = {});

}  // namespace dblplane

#endif
