#ifndef DBLPLANE_REPORT_HPP
#define DBLPLANE_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dblplane/classify.hpp"
#include "dblplane/moduli.hpp"
#include "dblplane/plane_model.hpp"

namespace dblplane {

// Full machine report: records, exclusion log, moduli table, plane models.
// Key-sorted JSON, byte-stable across runs with equal configuration.
std::string render_full_json(const ClassificationReport& report,
                             const ModuliSummary& moduli,
                             std::uint64_t plane_model_seed);

std::string render_full_table(const ClassificationReport& report,
                              const ModuliSummary& moduli,
                              std::uint64_t plane_model_seed);

// Declarative candidate description, round-trippable through `verify`.
std::string candidate_file_text(const SurfaceRecord& record);

struct CandidateSpec {
  SphereKind kind = SphereKind::Cyclic;
  unsigned n = 0;
  std::size_t d = 4;
  DeltaDivisor delta;
  std::size_t group_selector = 0;
  std::vector<std::size_t> monodromy_class_ids;
};

CandidateSpec parse_candidate_file(std::istream& in);
CandidateSpec candidate_of_record(const SurfaceRecord& record);

}  // namespace dblplane

#endif
