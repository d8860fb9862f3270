#include "dblplane/sphere.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dblplane/rational.hpp"

namespace dblplane {

std::string sphere_kind_name(SphereKind kind, unsigned n) {
  switch (kind) {
    case SphereKind::Cyclic: return "cyclic(" + std::to_string(n) + ")";
    case SphereKind::Dihedral: return "dihedral(" + std::to_string(n) + ")";
    case SphereKind::Tetrahedral: return "tetrahedral";
    case SphereKind::Octahedral: return "octahedral";
    case SphereKind::Icosahedral: return "icosahedral";
  }
  return "?";
}

std::vector<Perm> coset_action(const Group& group,
                               const std::vector<std::size_t>& subgroup_elements) {
  // Cosets x*H labeled by their minimal member.
  std::vector<std::size_t> coset_of(group.size(), npos);
  std::vector<std::size_t> labels;
  for (std::size_t x = 0; x < group.size(); ++x) {
    std::size_t best = npos;
    for (std::size_t h : subgroup_elements) best = std::min(best, group.multiply(x, h));
    coset_of[x] = best;
  }
  std::set<std::size_t> label_set(coset_of.begin(), coset_of.end());
  labels.assign(label_set.begin(), label_set.end());
  auto point_of = [&](std::size_t label) {
    return static_cast<unsigned>(
        std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<Perm> action;
  action.reserve(group.size());
  for (std::size_t g = 0; g < group.size(); ++g) {
    std::vector<unsigned> img(labels.size());
    for (std::size_t c = 0; c < labels.size(); ++c)
      img[c] = point_of(coset_of[group.multiply(g, labels[c])]);
    action.emplace_back(std::move(img));
  }
  return action;
}

namespace {

std::size_t normalized_rotation(std::size_t j, std::size_t m) {
  // rotation number of a 2*pi*j/m turn, folded into [1, m/2]
  std::size_t k = j % m;
  if (k == 0) return 0;
  return std::min(k, m - k);
}

SpecialOrbit make_orbit(const Group& model, std::size_t id,
                        std::size_t stab_generator_or_npos,
                        const std::vector<std::size_t>& stab_elements) {
  SpecialOrbit o;
  o.stabilizer = stab_elements;
  o.stab_generator = stab_generator_or_npos;
  o.action = coset_action(model, stab_elements);
  o.desc.id = id;
  o.desc.size = o.action[0].degree();
  o.desc.stabilizer_order = stab_elements.size();
  o.desc.special = stab_elements.size() > 1;
  return o;
}

}  // namespace

SphericalGroup SphericalGroup::catalog(SphereKind kind, unsigned n) {
  SphericalGroup s;
  s.kind_ = kind;
  s.n_ = n;
  switch (kind) {
    case SphereKind::Cyclic: {
      if (n < 1) throw std::invalid_argument("catalog: cyclic needs n >= 1");
      std::vector<Perm> gens;
      if (n > 1) {
        std::vector<unsigned> img(n);
        for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
        gens.emplace_back(std::move(img));
      }
      s.model_ = Group::from_generators(std::max(1u, n), gens, Group::kDefaultOrderBound,
                                        s.name());
      std::vector<std::size_t> full(s.model_.size());
      std::iota(full.begin(), full.end(), 0);
      s.orbits_.push_back(make_orbit(s.model_, 0, npos, full));
      s.orbits_.push_back(make_orbit(s.model_, 1, npos, full));
      s.orbits_[1].alpha_sign = -1;  // the opposite pole
      if (n > 1) {
        std::size_t r = s.model_.index_of(s.model_.generators()[0]);
        s.orbits_[0].stab_generator = r;
        s.orbits_[1].stab_generator = r;
      }
      break;
    }
    case SphereKind::Dihedral: {
      if (n < 2) throw std::invalid_argument("catalog: dihedral needs n >= 2");
      std::vector<unsigned> rimg(2 * n), simg(2 * n);
      for (unsigned i = 0; i < 2 * n; ++i) {
        rimg[i] = (i + 2) % (2 * n);
        simg[i] = (2 * n - i) % (2 * n);
      }
      Perm r{std::vector<unsigned>(rimg)}, refl{std::vector<unsigned>(simg)};
      s.model_ = Group::from_generators(2 * n, {r, refl}, Group::kDefaultOrderBound,
                                        s.name());
      std::size_t ri = s.model_.index_of(r);
      std::size_t si = s.model_.index_of(refl);
      std::size_t sri = s.model_.index_of(refl * r);
      s.orbits_.push_back(make_orbit(s.model_, 0, ri, s.model_.cyclic_subgroup(ri)));
      s.orbits_.push_back(make_orbit(s.model_, 1, si, s.model_.cyclic_subgroup(si)));
      std::size_t second = (n % 2 == 0) ? sri : si;
      s.orbits_.push_back(make_orbit(s.model_, 2, second, s.model_.cyclic_subgroup(second)));
      break;
    }
    case SphereKind::Tetrahedral: {
      Perm c3 = Perm::from_cycles(4, {{0, 1, 2}});
      Perm dc = Perm::from_cycles(4, {{0, 1}, {2, 3}});
      s.model_ = Group::from_generators(4, {c3, dc}, Group::kDefaultOrderBound, s.name());
      std::size_t c3i = s.model_.index_of(c3);
      std::size_t dci = s.model_.index_of(dc);
      s.orbits_.push_back(make_orbit(s.model_, 0, c3i, s.model_.cyclic_subgroup(c3i)));
      s.orbits_.push_back(make_orbit(s.model_, 1, c3i, s.model_.cyclic_subgroup(c3i)));
      s.orbits_[1].alpha_sign = -1;  // opposite end of the vertex axes
      s.orbits_.push_back(make_orbit(s.model_, 2, dci, s.model_.cyclic_subgroup(dci)));
      break;
    }
    case SphereKind::Octahedral: {
      Perm c4 = Perm::from_cycles(4, {{0, 1, 2, 3}});
      Perm t = Perm::from_cycles(4, {{0, 1}});
      Perm c3 = Perm::from_cycles(4, {{0, 1, 2}});
      s.model_ = Group::from_generators(4, {c4, t}, Group::kDefaultOrderBound, s.name());
      std::size_t c4i = s.model_.index_of(c4);
      std::size_t c3i = s.model_.index_of(c3);
      std::size_t ti = s.model_.index_of(t);
      s.orbits_.push_back(make_orbit(s.model_, 0, c4i, s.model_.cyclic_subgroup(c4i)));
      s.orbits_.push_back(make_orbit(s.model_, 1, c3i, s.model_.cyclic_subgroup(c3i)));
      s.orbits_.push_back(make_orbit(s.model_, 2, ti, s.model_.cyclic_subgroup(ti)));
      break;
    }
    case SphereKind::Icosahedral: {
      Perm c5 = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
      Perm c3 = Perm::from_cycles(5, {{0, 1, 2}});
      Perm dc = Perm::from_cycles(5, {{0, 1}, {2, 3}});
      s.model_ = Group::from_generators(5, {c5, c3}, Group::kDefaultOrderBound, s.name());
      std::size_t c5i = s.model_.index_of(c5);
      std::size_t c3i = s.model_.index_of(c3);
      std::size_t dci = s.model_.index_of(dc);
      s.orbits_.push_back(make_orbit(s.model_, 0, c5i, s.model_.cyclic_subgroup(c5i)));
      s.orbits_.push_back(make_orbit(s.model_, 1, c3i, s.model_.cyclic_subgroup(c3i)));
      s.orbits_.push_back(make_orbit(s.model_, 2, dci, s.model_.cyclic_subgroup(dci)));
      break;
    }
  }
  s.finalize();
  return s;
}

void SphericalGroup::finalize() {
  classes_ = model_.conjugacy_classes();
  class_of_ = model_.class_of_element();
  geometry_.assign(classes_.size(), ClassGeometry{});

  for (std::size_t c = 0; c < classes_.size(); ++c) {
    std::size_t rep = classes_[c][0];
    ClassGeometry geo;
    geo.order = model_.element_order(rep);
    geo.fixed_count.assign(orbits_.size(), 0);
    for (std::size_t o = 0; o < orbits_.size(); ++o) {
      const Perm& act = orbits_[o].action[rep];
      std::size_t fix = 0;
      for (unsigned p = 0; p < act.degree(); ++p)
        if (act[p] == p) ++fix;
      geo.fixed_count[o] = fix;
    }
    geometry_[c] = geo;
  }

  // Rotation numbers.
  auto assign = [&](std::size_t element, std::size_t k) {
    geometry_[class_of_[element]].rotation = k;
  };
  switch (kind_) {
    case SphereKind::Cyclic: {
      if (n_ > 1) {
        std::size_t r = model_.index_of(model_.generators()[0]);
        std::size_t x = r;
        for (std::size_t j = 1; j < n_; ++j) {
          std::size_t m = model_.element_order(x);
          assign(x, normalized_rotation(j / (n_ / m), m));
          x = model_.multiply(x, r);
        }
      }
      break;
    }
    case SphereKind::Dihedral: {
      std::size_t r = orbits_[0].stab_generator;
      std::size_t x = r;
      for (std::size_t j = 1; j < n_; ++j) {
        std::size_t m = model_.element_order(x);
        assign(x, normalized_rotation(j / (n_ / m), m));
        x = model_.multiply(x, r);
      }
      for (std::size_t e = 0; e < model_.size(); ++e)
        if (model_.element_order(e) == 2 && geometry_[class_of_[e]].rotation == 0)
          assign(e, 1);
      break;
    }
    case SphereKind::Tetrahedral:
    case SphereKind::Octahedral: {
      for (std::size_t e = 0; e < model_.size(); ++e) {
        std::size_t m = model_.element_order(e);
        if (m > 1) assign(e, 1);  // all classes here rotate by one step
      }
      break;
    }
    case SphereKind::Icosahedral: {
      for (std::size_t e = 0; e < model_.size(); ++e) {
        std::size_t m = model_.element_order(e);
        if (m == 2 || m == 3) assign(e, 1);
      }
      std::size_t c5 = orbits_[0].stab_generator;
      assign(c5, 1);
      assign(model_.multiply(c5, c5), 2);
      break;
    }
  }

  // Validation: orbit-stabilizer, Riemann-Hurwitz, two fixed points per
  // nontrivial class, rotation numbers coprime to the order.
  for (const auto& o : orbits_) {
    if (o.desc.size * o.desc.stabilizer_order != model_.size())
      throw std::runtime_error("catalog: orbit-stabilizer identity fails");
  }
  Rat rh(-2, 1);
  Rat sum(0, 1);
  for (const auto& o : orbits_)
    if (o.desc.special)
      sum = sum + (Rat(1) - Rat(1, static_cast<long long>(o.desc.stabilizer_order)));
  Rat lhs = Rat(static_cast<long long>(model_.size())) * (Rat(-2) + sum);
  if (!(lhs == rh)) throw std::runtime_error("catalog: Riemann-Hurwitz identity fails");
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const auto& geo = geometry_[c];
    if (geo.order == 1) continue;
    std::size_t total = 0;
    for (std::size_t o = 0; o < orbits_.size(); ++o)
      if (orbits_[o].desc.special) total += geo.fixed_count[o];
    if (total != 2)
      throw std::runtime_error("catalog: class does not fix exactly two points");
    if (geo.rotation == 0 || std::gcd(geo.rotation, geo.order) != 1 ||
        2 * geo.rotation > geo.order)
      throw std::runtime_error("catalog: bad rotation number");
  }
}

std::size_t delta_degree(const SphericalGroup& sphere, const DeltaDivisor& delta) {
  std::size_t total = delta.free_multiplicity * sphere.free_orbit_size();
  for (std::size_t id : delta.special_ids) total += sphere.orbits()[id].desc.size;
  return total;
}

std::string delta_description(const SphericalGroup& sphere, const DeltaDivisor& delta) {
  std::string out;
  for (std::size_t id : delta.special_ids) {
    if (!out.empty()) out += "+";
    out += "orbit" + std::to_string(id) + "[" +
           std::to_string(sphere.orbits()[id].desc.size) + "]";
  }
  if (delta.free_multiplicity > 0) {
    if (!out.empty()) out += "+";
    out += "free*" + std::to_string(delta.free_multiplicity);
  }
  if (out.empty()) out = "empty";
  return out;
}

std::vector<DeltaDivisor> delta_candidates(const SphericalGroup& sphere,
                                           std::size_t degree) {
  std::vector<std::size_t> special;
  for (const auto& o : sphere.orbits())
    if (o.desc.special) special.push_back(o.desc.id);
  std::vector<DeltaDivisor> out;
  std::size_t free_size = sphere.free_orbit_size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << special.size()); ++mask) {
    DeltaDivisor d;
    std::size_t sum = 0;
    for (std::size_t i = 0; i < special.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        d.special_ids.push_back(special[i]);
        sum += sphere.orbits()[special[i]].desc.size;
      }
    }
    if (sum > degree) continue;
    if ((degree - sum) % free_size != 0) continue;
    d.free_multiplicity = (degree - sum) / free_size;
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const DeltaDivisor& a, const DeltaDivisor& b) {
    if (a.special_ids != b.special_ids) return a.special_ids < b.special_ids;
    return a.free_multiplicity < b.free_multiplicity;
  });
  return out;
}

}  // namespace dblplane
