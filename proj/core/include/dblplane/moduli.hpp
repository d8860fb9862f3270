#ifndef DBLPLANE_MODULI_HPP
#define DBLPLANE_MODULI_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dblplane/classify.hpp"

namespace dblplane {

// Equivariant deformation dimension from the branch signatures of the two
// quotient maps: each side contributes max(r - 3, 0) moduli of branch points
// on the rational base.
long long equivariant_dim(const std::vector<std::size_t>& signature_F,
                          const std::vector<std::size_t>& signature_C);

enum class Tri { Yes, No, Unknown };

struct ModuliRow {
  std::string type;
  long long dimension = 0;
  bool closed = true;
  bool open = true;
  bool normal = true;
  Tri irreducible = Tri::Yes;
  std::string note;
};

struct ModuliSummary {
  std::vector<ModuliRow> rows;          // Ia, Ib, Ic, Id, II
  std::size_t nonbirational_components = 0;
};

// Requires all five types in the report; dimensions are recomputed from the
// records' quotient signatures, never read from a table.
ModuliSummary moduli_summary(const ClassificationReport& report);

}  // namespace dblplane

#endif
