#include "dblplane/moduli.hpp"

#include <algorithm>

namespace dblplane {

long long equivariant_dim(const std::vector<std::size_t>& signature_F,
                          const std::vector<std::size_t>& signature_C) {
  auto side = [](const std::vector<std::size_t>& sig) -> long long {
    long long r = static_cast<long long>(sig.size());
    return std::max<long long>(r - 3, 0);
  };
  return side(signature_F) + side(signature_C);
}

ModuliSummary moduli_summary(const ClassificationReport& report) {
  ModuliSummary summary;
  for (const auto& row : known_types()) {
    const SurfaceRecord* rec = nullptr;
    for (const auto& r : report.records)
      if (r.type_tag == row.tag) rec = &r;
    if (!rec)
      throw std::invalid_argument(std::string("moduli_summary: missing type ") + row.tag);

    std::vector<std::size_t> sig_f = quotient_signature_F(rec->setup);
    std::vector<std::size_t> sig_c;
    for (std::size_t g : rec->datum.monodromy)
      sig_c.push_back(rec->datum.group.element_order(g));

    ModuliRow out;
    out.type = row.tag;
    out.dimension = equivariant_dim(sig_f, sig_c);
    out.closed = out.open = out.normal = true;
    if (out.type == "II") {
      out.irreducible = Tri::Unknown;
      out.note = "irreducibility undecided";
    }
    summary.rows.push_back(std::move(out));
  }
  summary.nonbirational_components = 0;
  for (const auto& row : summary.rows)
    if (row.type != "II") ++summary.nonbirational_components;
  return summary;
}

}  // namespace dblplane
