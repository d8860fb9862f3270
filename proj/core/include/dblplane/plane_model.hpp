#ifndef DBLPLANE_PLANE_MODEL_HPP
#define DBLPLANE_PLANE_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dblplane/rational.hpp"

namespace dblplane {

enum class DuValType { I, II };

// A branch-curve singular point for the canonical resolution.  Multiplicity
// is that of the total transform of the branch, so a child under an
// odd-multiplicity parent already includes the inherited exceptional curve.
struct SingularPoint {
  std::size_t multiplicity = 2;
  std::optional<std::size_t> parent;  // index of the infinitely-near base point
};

struct BranchCurveSpec {
  std::size_t half_degree = 1;  // branch curve has degree 2*half_degree
  std::vector<SingularPoint> points;
};

// Branch data of the degree-two plane model: degree 22 = 16 + six lines for
// type I, degree 26 = 21 + five lines for type II.
BranchCurveSpec duval_spec(DuValType type);

struct ResolutionInvariants {
  long long chi = 0;
  long long ksq = 0;
};

// chi = 2 + m(m-3)/2 - sum floor(m_i/2)(floor(m_i/2)-1)/2,
// K^2 = 2(m-3)^2 - 2 sum (floor(m_i/2)-1)^2.
ResolutionInvariants canonical_resolution_invariants(const BranchCurveSpec& spec);

// One linear condition set on plane curves of the given degree: vanish to
// order `multiplicity` at the point, optionally with the next-order term
// killed along a tangent direction.
struct PointCondition {
  Rat x, y;
  std::size_t multiplicity = 1;
  bool tangent = false;
  Rat tx, ty;
};

// Projective dimension of the linear system (so -1 means empty), computed by
// exact integer rank of the condition matrix.
long long linsys_dimension(std::size_t degree,
                           const std::vector<PointCondition>& conditions);

// Deterministic generic-coordinate sampler.
class GenericSampler {
 public:
  explicit GenericSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b9ull) {}
  std::uint64_t next_u64();
  long long small_int(long long lo, long long hi);

 private:
  std::uint64_t state_;
};

struct PgCertificate {
  long long obstruction_dimension = -1;  // dimension of the obstructing system
  long long pg = 0;                      // dimension + 1
};

// The geometric-genus obstruction for the Du Val branch data, at seeded
// generic coordinates.  For type I the obstruction is a conic through the six
// tacnode centers; `force_conic` places them on one deliberately.
PgCertificate duval_pg_check(DuValType type, std::uint64_t seed,
                             bool force_conic = false, int max_retries = 16);

BranchCurveSpec parse_branch_spec(std::istream& in);

}  // namespace dblplane

#endif
