#include "dblplane/surface.hpp"

#include <algorithm>

#include "dblplane/rational.hpp"

namespace dblplane {

std::string sigma_behavior_name(SigmaBehavior b) {
  switch (b) {
    case SigmaBehavior::PointwiseFixed: return "pointwise-fixed";
    case SigmaBehavior::InvariantIsolated: return "invariant";
    case SigmaBehavior::SwappedPair: return "swapped-pair";
  }
  return "?";
}

namespace {

// Map datum-group element indices to lifted-group indices.  Both element
// lists are sorted the same way, so the chosen-group indices line up.
struct GroupBridge {
  const HyperellipticSetup& setup;
  const BranchDatum& datum;
  const std::vector<std::size_t>& to_lifted;  // datum index -> lifted index

  GroupBridge(const HyperellipticSetup& s, const BranchDatum& d)
      : setup(s), datum(d), to_lifted(s.group_indices()) {
    if (datum.group.size() != to_lifted.size())
      throw std::invalid_argument("surface: datum group does not match the chosen subgroup");
    for (std::size_t i = 0; i < datum.group.size(); ++i)
      if (!(datum.group.element(i) == setup.lifted_group().element(to_lifted[i])))
        throw std::invalid_argument("surface: datum group does not match the chosen subgroup");
  }

  std::size_t lifted(std::size_t datum_index) const { return to_lifted[datum_index]; }
  std::size_t datum_index(std::size_t lifted_index) const {
    auto it = std::lower_bound(to_lifted.begin(), to_lifted.end(), lifted_index);
    if (it == to_lifted.end() || *it != lifted_index)
      throw std::invalid_argument("surface: element outside the chosen subgroup");
    return static_cast<std::size_t>(it - to_lifted.begin());
  }
};

std::vector<std::size_t> elements_not_free_on_C(const GroupBridge& bridge) {
  std::vector<std::size_t> b;
  for (std::size_t i = 0; i < bridge.datum.group.size(); ++i) {
    if (i == bridge.datum.group.identity_index()) continue;
    if (fixed_points_on_C(bridge.datum, i) > 0) b.push_back(bridge.lifted(i));
  }
  return b;
}

}  // namespace

bool check_free_diagonal(const HyperellipticSetup& setup, const BranchDatum& datum) {
  GroupBridge bridge(setup, datum);
  auto a = set_A(setup);
  auto b = elements_not_free_on_C(bridge);
  for (std::size_t e : b)
    if (std::binary_search(a.begin(), a.end(), e)) return false;
  return true;
}

Invariants surface_invariants(const HyperellipticSetup& setup,
                              const BranchDatum& datum) {
  GroupBridge bridge(setup, datum);
  long long gf = static_cast<long long>(setup.genus_F());
  long long gc = datum_genus(datum);
  Rat chi = Rat((gf - 1) * (gc - 1), static_cast<long long>(datum.group.size()));
  if (!chi.is_integer())
    throw std::runtime_error("surface_invariants: Euler characteristic is not integral");
  Invariants inv;
  inv.chi = chi.num;
  inv.q = quotient_genus_chosen(setup);  // the datum side is a cover of the line
  inv.pg = inv.chi - 1 + inv.q;
  inv.ksq = 8 * inv.chi;
  return inv;
}

std::size_t count_sigma_isolated(const HyperellipticSetup& setup,
                                 const BranchDatum& datum) {
  GroupBridge bridge(setup, datum);
  const Group& g0 = setup.lifted_group();
  long long total = 0;
  for (std::size_t i = 0; i < datum.group.size(); ++i) {
    if (i == datum.group.identity_index()) continue;
    std::size_t fc = fixed_points_on_C(datum, i);
    if (fc == 0) continue;
    std::size_t tg = g0.multiply(setup.tau(), bridge.lifted(i));
    if (tg == g0.identity_index())
      throw std::runtime_error("count_sigma_isolated: tau appears in the branch support");
    total += static_cast<long long>(fixed_points_on_F(setup, tg)) *
             static_cast<long long>(fc);
  }
  if (total % static_cast<long long>(datum.group.size()) != 0)
    throw std::runtime_error("count_sigma_isolated: count is not integral");
  return static_cast<std::size_t>(total / datum.group.size());
}

std::vector<FibreInfo> multiple_fibres_p1(const HyperellipticSetup& setup,
                                          const BranchDatum& datum) {
  GroupBridge bridge(setup, datum);
  const Group& g0 = setup.lifted_group();
  const auto& grp = setup.group_indices();
  bool tau_in = setup.tau_in_group();

  std::vector<FibreInfo> out;
  for (const auto& co : setup.point_census()) {
    std::vector<std::size_t> stab_g;
    for (std::size_t e : co.stabilizer)
      if (std::binary_search(grp.begin(), grp.end(), e)) stab_g.push_back(e);
    if (stab_g.size() <= 1) continue;  // smooth fibre

    std::size_t sub_orbit = grp.size() / stab_g.size();
    std::size_t parts = co.size / sub_orbit;

    if (co.weierstrass) {
      for (std::size_t p = 0; p < parts; ++p)
        out.push_back(FibreInfo{stab_g.size(), SigmaBehavior::PointwiseFixed, 0});
      continue;
    }
    if (!tau_in && parts == 2) {
      out.push_back(FibreInfo{stab_g.size(), SigmaBehavior::SwappedPair, 0});
      out.push_back(FibreInfo{stab_g.size(), SigmaBehavior::SwappedPair, 0});
      continue;
    }
    // Invariant fibre off the Weierstrass locus: isolated points sit on it,
    // one |G|-orbit of solutions per coset element with fixed points on C.
    std::vector<std::size_t> coset;
    for (std::size_t s : co.stabilizer) {
      std::size_t g = g0.multiply(setup.tau(), s);
      if (std::binary_search(grp.begin(), grp.end(), g)) coset.push_back(g);
    }
    long long sum = 0;
    for (std::size_t g : coset) {
      if (g == g0.identity_index())
        throw std::runtime_error("multiple_fibres_p1: unexpected Weierstrass member");
      sum += static_cast<long long>(
          fixed_points_on_C(datum, bridge.datum_index(g)));
    }
    if (sum % static_cast<long long>(stab_g.size()) != 0)
      throw std::runtime_error("multiple_fibres_p1: placement count not integral");
    for (std::size_t p = 0; p < parts; ++p)
      out.push_back(FibreInfo{stab_g.size(), SigmaBehavior::InvariantIsolated,
                              static_cast<std::size_t>(sum / stab_g.size())});
  }
  std::sort(out.begin(), out.end(), [](const FibreInfo& a, const FibreInfo& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    if (a.behavior != b.behavior) return a.behavior < b.behavior;
    return a.isolated > b.isolated;
  });
  return out;
}

SurfaceRecord make_record(HyperellipticSetup setup, BranchDatum datum,
                          Provenance provenance) {
  GroupBridge bridge(setup, datum);
  SurfaceRecord rec;
  rec.a_set = set_A(setup);
  rec.b_set = elements_not_free_on_C(bridge);
  for (std::size_t e : rec.b_set)
    if (std::binary_search(rec.a_set.begin(), rec.a_set.end(), e))
      throw std::runtime_error("make_record: diagonal action is not free");
  rec.invariants = surface_invariants(setup, datum);
  rec.isolated_k = count_sigma_isolated(setup, datum);
  rec.fibres = multiple_fibres_p1(setup, datum);
  rec.provenance = std::move(provenance);
  rec.setup = std::move(setup);
  rec.datum = std::move(datum);
  return rec;
}

}  // namespace dblplane
