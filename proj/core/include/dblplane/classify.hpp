#ifndef DBLPLANE_CLASSIFY_HPP
#define DBLPLANE_CLASSIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dblplane/surface.hpp"

namespace dblplane {

struct SearchBounds {
  unsigned max_n = 12;       // dihedral and cyclic bound; forced by deg(delta) <= 12
  std::size_t r_cap = 8;
  std::size_t order_cap = 1000;
  unsigned threads = 1;

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

// Exclusion reasons, shared with the test suites.
inline constexpr const char* kReasonNoDelta =
    "no invariant branch divisor of the required degree";
inline constexpr const char* kReasonLambdaNotReal = "lambda character not +-1";
inline constexpr const char* kReasonAEmpty = "A is empty";
inline constexpr const char* kReasonANotGenerating = "A does not generate";
inline constexpr const char* kReasonBEmpty = "B_allowed is empty";
inline constexpr const char* kReasonBNotGenerating = "B_allowed does not generate";
inline constexpr const char* kReasonNoVector =
    "no generating vector with the required branch data";
inline constexpr const char* kReasonInvariants = "invariant check failed";

struct Exclusion {
  std::string sphere;
  std::size_t d = 4;
  std::string delta;   // "-" when no divisor exists at all
  std::string group;   // "-" before a subgroup is chosen
  std::string reason;
};

struct ClassificationReport {
  std::vector<SurfaceRecord> records;
  std::vector<Exclusion> exclusions;
  SearchBounds bounds;
};

// The full search: every rotation group in the catalog, both half-degrees,
// every invariant branch divisor, every surjecting subgroup.  Failures land
// in the exclusion log with the first failed condition; successes become
// verified records, deduplicated by (g(F), g(C), group isomorphism).
ClassificationReport enumerate_candidates(const SearchBounds& bounds = {});

// Known families, used only to label verified records.
struct TypeRow {
  const char* tag;
  long long g_f;
  long long g_c;
  std::size_t group_order;
  const char* group_name;
};
const std::vector<TypeRow>& known_types();
Group reference_group(const std::string& tag);
std::string recognize_group_name(const Group& g);

// The (g(F), g(C)) pairs must be pairwise distinct and swap-free.
bool verify_uniqueness(const ClassificationReport& report);

// "birational" for type II, "non-birational-degree-2" for the others;
// throws on an unclassified record.
std::string bicanonical_flag(const SurfaceRecord& record);

}  // namespace dblplane

#endif
