#include "dblplane/hyperelliptic.hpp"

#include <algorithm>
#include <numeric>

namespace dblplane {

namespace {

// Fixed points of the class representative inside delta, counted over the
// special orbits it contains (free orbits are generic and contain none).
std::size_t fixed_in_delta(const SphericalGroup& sphere, const DeltaDivisor& delta,
                           std::size_t class_index) {
  const auto& geo = sphere.geometry(class_index);
  std::size_t count = 0;
  for (std::size_t id : delta.special_ids) count += geo.fixed_count[id];
  return count;
}

// Free orbits of <h> of full size m inside delta, counted with multiplicity.
std::size_t free_suborbits(const SphericalGroup& sphere, const DeltaDivisor& delta,
                           std::size_t class_index) {
  const auto& geo = sphere.geometry(class_index);
  std::size_t m = geo.order;
  std::size_t f = 0;
  for (std::size_t id : delta.special_ids) {
    std::size_t size = sphere.orbits()[id].desc.size;
    std::size_t fix = geo.fixed_count[id];
    if ((size - fix) % m != 0)
      throw std::runtime_error("hyperelliptic: suborbit decomposition failed");
    f += (size - fix) / m;
  }
  f += delta.free_multiplicity * (sphere.free_orbit_size() / m);
  return f;
}

}  // namespace

int compute_lambda(const SphericalGroup& sphere, const DeltaDivisor& delta,
                   std::size_t class_index) {
  const auto& geo = sphere.geometry(class_index);
  if (geo.order < 2)
    throw std::invalid_argument("compute_lambda: class must have order >= 2");
  std::size_t eps = fixed_in_delta(sphere, delta, class_index);
  if (eps == 1)
    throw character_error("character value not +-1 for " + sphere.name() +
                          ", " + delta_description(sphere, delta));
  std::size_t f = free_suborbits(sphere, delta, class_index);
  return (geo.rotation * f) % 2 == 0 ? 1 : -1;
}

HyperellipticSetup HyperellipticSetup::make(SphericalGroup sphere, std::size_t d,
                                            DeltaDivisor delta) {
  if (d % 2 != 0 || d < 2)
    throw std::invalid_argument("HyperellipticSetup: d must be even and >= 2");
  if (delta_degree(sphere, delta) != 2 * d)
    throw std::invalid_argument("HyperellipticSetup: delta degree must be 2d");

  HyperellipticSetup s;
  s.sphere_ = std::move(sphere);
  s.d_ = d;
  s.delta_ = std::move(delta);

  const Group& gbar = s.sphere_.group();
  const auto& classes = s.sphere_.classes();

  s.lambda_.assign(classes.size(), 1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (s.sphere_.geometry(c).order < 2) continue;
    s.lambda_[c] = compute_lambda(s.sphere_, s.delta_, c);
  }
  // A character must be multiplicative; anything else is a catalog bug.
  for (std::size_t a = 0; a < gbar.size(); ++a)
    for (std::size_t b = 0; b < gbar.size(); ++b) {
      int la = s.lambda_[s.sphere_.class_of(a)];
      int lb = s.lambda_[s.sphere_.class_of(b)];
      int lab = s.lambda_[s.sphere_.class_of(gbar.multiply(a, b))];
      if (la * lb != lab)
        throw std::runtime_error("HyperellipticSetup: lambda is not a character");
    }

  // Lifted group as pairs (base, i^mu) acting on the base points plus a
  // 4-point block recording mu.
  std::size_t base_deg = gbar.degree();
  std::vector<Perm> lifts;
  for (std::size_t b = 0; b < gbar.size(); ++b) {
    int lam = s.lambda_[s.sphere_.class_of(b)];
    for (unsigned mu = 0; mu < 4; ++mu) {
      bool valid = (lam == 1) ? (mu % 2 == 0) : (mu % 2 == 1);
      if (!valid) continue;
      std::vector<unsigned> img(base_deg + 4);
      for (std::size_t i = 0; i < base_deg; ++i)
        img[i] = gbar.element(b)[static_cast<unsigned>(i)];
      for (unsigned t = 0; t < 4; ++t)
        img[base_deg + t] = static_cast<unsigned>(base_deg) + (t + mu) % 4;
      lifts.emplace_back(std::move(img));
    }
  }
  s.g0_ = Group::from_elements(base_deg + 4, std::move(lifts));

  s.pairs_.assign(s.g0_.size(), LiftPair{});
  s.pair_lookup_.assign(gbar.size() * 4, npos);
  s.proj_.assign(s.g0_.size(), npos);
  for (std::size_t e = 0; e < s.g0_.size(); ++e) {
    const Perm& p = s.g0_.element(e);
    std::vector<unsigned> base_img(base_deg);
    for (std::size_t i = 0; i < base_deg; ++i) base_img[i] = p[static_cast<unsigned>(i)];
    std::size_t b = gbar.index_of(Perm(std::move(base_img)));
    unsigned mu = (p[static_cast<unsigned>(base_deg)] - static_cast<unsigned>(base_deg)) % 4;
    s.pairs_[e] = LiftPair{b, mu};
    s.pair_lookup_[b * 4 + mu] = e;
    s.proj_[e] = b;
  }
  s.tau_ = s.pair_lookup_[gbar.identity_index() * 4 + 2];

  // Fixed-point table.  The curve lives in P(1,1,d) as y^2 = p(x0,x1), and a
  // rotation of order m with rotation number k acts in eigencoordinates as
  // (x0,x1) -> (a x0, a^-1 x1) with a = exp(i pi k/m).  Rescaling by a^-1 at
  // the fixed point (1:0) sends (1,0,y) to (1,0,a^-d mu y), so the lift
  // (h, i^mu) fixes the two curve points there exactly when a^-d i^mu = 1,
  // and at the opposite fixed point when a^d i^mu = 1.  Points of delta carry
  // a single curve point fixed by both lifts.  Summing over both fixed points
  // makes the count independent of the eigenvalue labeling, and mu^2 =
  // lambda(h) makes both exponents land in {0, 1/2} mod 1.
  s.fixed_.assign(s.g0_.size(), 0);
  s.fixed_[s.g0_.identity_index()] = -1;
  for (std::size_t e = 0; e < s.g0_.size(); ++e) {
    if (e == s.g0_.identity_index()) continue;
    const LiftPair& lp = s.pairs_[e];
    if (lp.base == gbar.identity_index()) {
      s.fixed_[e] = static_cast<long long>(2 * d);  // tau: the Weierstrass points
      continue;
    }
    std::size_t c = s.sphere_.class_of(lp.base);
    const auto& geo = s.sphere_.geometry(c);
    std::size_t eps = fixed_in_delta(s.sphere_, s.delta_, c);
    long long count = static_cast<long long>(eps);
    if (eps == 0) {
      long long m = static_cast<long long>(geo.order);
      long long k = static_cast<long long>(geo.rotation);
      for (int sign : {-1, +1}) {
        Rat expo = (Rat(sign * static_cast<long long>(d) * k, 2 * m) +
                    Rat(lp.mu, 4)).mod_one();
        if (!(expo == Rat(0) || expo == Rat(1, 2)))
          throw std::runtime_error("HyperellipticSetup: fixed-point rule inconsistent");
        if (expo == Rat(0)) count += 2;
      }
    }
    s.fixed_[e] = count;
  }

  s.group_.resize(s.g0_.size());
  std::iota(s.group_.begin(), s.group_.end(), 0);
  return s;
}

bool HyperellipticSetup::lambda_trivial() const {
  for (int v : lambda_)
    if (v != 1) return false;
  return true;
}

std::size_t HyperellipticSetup::pair_index(std::size_t base, unsigned mu) const {
  std::size_t e = pair_lookup_[base * 4 + (mu % 4)];
  if (e == npos) throw std::invalid_argument("pair_index: no such lift");
  return e;
}

std::vector<std::vector<std::size_t>> HyperellipticSetup::surjecting() const {
  return surjecting_subgroups(g0_, proj_, sphere_.group());
}

HyperellipticSetup HyperellipticSetup::with_group(
    std::vector<std::size_t> group_indices) const {
  std::sort(group_indices.begin(), group_indices.end());
  if (g0_.subgroup_closure(group_indices).size() != group_indices.size())
    throw std::invalid_argument("with_group: element set is not a subgroup");
  std::vector<char> hit(sphere_.group().size(), 0);
  for (std::size_t e : group_indices) hit[proj_[e]] = 1;
  for (char c : hit)
    if (!c) throw std::invalid_argument("with_group: subgroup does not surject");
  HyperellipticSetup out = *this;
  out.group_ = std::move(group_indices);
  return out;
}

Group HyperellipticSetup::chosen_group() const {
  return g0_.subgroup(group_);
}

bool HyperellipticSetup::tau_in_group() const {
  return std::binary_search(group_.begin(), group_.end(), tau_);
}

std::vector<CurveOrbit> HyperellipticSetup::point_census() const {
  const Group& gbar = sphere_.group();
  std::vector<CurveOrbit> out;
  for (const auto& orb : sphere_.orbits()) {
    if (!orb.desc.special) continue;
    bool in_delta = std::find(delta_.special_ids.begin(), delta_.special_ids.end(),
                              orb.desc.id) != delta_.special_ids.end();
    CurveOrbit co;
    co.base = "orbit" + std::to_string(orb.desc.id);
    co.weierstrass = in_delta;
    if (in_delta) {
      // Single Weierstrass point over each orbit point; every lift of the
      // point stabilizer fixes it.
      for (std::size_t h : orb.stabilizer)
        for (unsigned mu = 0; mu < 4; ++mu)
          if (pair_lookup_[h * 4 + mu] != npos)
            co.stabilizer.push_back(pair_lookup_[h * 4 + mu]);
      co.size = orb.desc.size;
    } else {
      // Two points over each orbit point; exactly one lift per stabilizer
      // power fixes them, with exponent coherent along powers.
      std::size_t h = orb.stab_generator;
      std::size_t m = orb.desc.stabilizer_order;
      long long k = static_cast<long long>(
                        sphere_.geometry(sphere_.class_of(h)).rotation) *
                    orb.alpha_sign;
      std::size_t x = gbar.identity_index();
      for (std::size_t a = 0; a < m; ++a) {
        Rat mu_frac = (Rat(static_cast<long long>(d_) * static_cast<long long>(a) * k,
                           static_cast<long long>(m)) * Rat(1, 2)).mod_one() * Rat(4);
        if (!mu_frac.is_integer())
          throw std::runtime_error("point_census: incoherent stabilizer exponent");
        unsigned mu = static_cast<unsigned>(mu_frac.num % 4);
        co.stabilizer.push_back(pair_index(x, mu));
        x = gbar.multiply(x, h);
      }
      co.size = 2 * orb.desc.size;
    }
    std::sort(co.stabilizer.begin(), co.stabilizer.end());
    if (g0_.subgroup_closure(co.stabilizer).size() != co.stabilizer.size())
      throw std::runtime_error("point_census: stabilizer is not closed");
    // Point stabilizers on a smooth curve are cyclic.
    bool cyclic = false;
    for (std::size_t e : co.stabilizer)
      if (g0_.element_order(e) == co.stabilizer.size()) cyclic = true;
    if (!cyclic) throw std::runtime_error("point_census: stabilizer not cyclic");
    out.push_back(std::move(co));
  }
  for (std::size_t i = 0; i < delta_.free_multiplicity; ++i) {
    CurveOrbit co;
    co.base = "free" + std::to_string(i);
    co.weierstrass = true;
    co.stabilizer = {g0_.identity_index(), tau_};
    std::sort(co.stabilizer.begin(), co.stabilizer.end());
    co.size = sphere_.free_orbit_size();
    out.push_back(std::move(co));
  }
  return out;
}

std::size_t fixed_points_on_F(const HyperellipticSetup& setup, std::size_t element) {
  if (element == setup.lifted_group().identity_index())
    throw std::invalid_argument("fixed_points_on_F: identity fixes everything");
  return static_cast<std::size_t>(setup.fixed_[element]);
}

std::vector<std::size_t> set_A(const HyperellipticSetup& setup) {
  std::vector<std::size_t> a;
  for (std::size_t e : setup.group_indices()) {
    if (e == setup.lifted_group().identity_index()) continue;
    if (fixed_points_on_F(setup, e) > 0) a.push_back(e);
  }
  // Stable under conjugation by the chosen subgroup.
  const Group& g0 = setup.lifted_group();
  for (std::size_t e : a)
    for (std::size_t x : setup.group_indices())
      if (!std::binary_search(a.begin(), a.end(), g0.conjugate(e, x)))
        throw std::runtime_error("set_A: not conjugation-stable");
  return a;
}

std::vector<std::size_t> free_involutions(const HyperellipticSetup& setup) {
  std::vector<std::size_t> b;
  for (std::size_t e : setup.group_indices()) {
    if (e == setup.lifted_group().identity_index()) continue;
    if (setup.lifted_group().element_order(e) == 2 &&
        fixed_points_on_F(setup, e) == 0)
      b.push_back(e);
  }
  return b;
}

namespace {

std::vector<std::size_t> signature_for(const HyperellipticSetup& setup,
                                       const std::vector<std::size_t>& grp,
                                       long long* genus_out) {
  std::vector<std::size_t> sig;
  Rat sum(0);
  for (const auto& co : setup.point_census()) {
    std::vector<std::size_t> stab_g;
    for (std::size_t e : co.stabilizer)
      if (std::binary_search(grp.begin(), grp.end(), e)) stab_g.push_back(e);
    if (stab_g.size() <= 1) continue;
    // Orbits of the subgroup on this curve orbit.
    std::size_t sub_orbit = grp.size() / stab_g.size();
    if (co.size % sub_orbit != 0)
      throw std::runtime_error("quotient signature: orbit split mismatch");
    std::size_t parts = co.size / sub_orbit;
    for (std::size_t p = 0; p < parts; ++p) {
      sig.push_back(stab_g.size());
      sum = sum + (Rat(1) - Rat(1, static_cast<long long>(stab_g.size())));
    }
  }
  std::sort(sig.begin(), sig.end());
  // 2g(F) - 2 = |G| (2g' - 2 + sum(1 - 1/m_i)); solve for the quotient genus.
  long long gf = static_cast<long long>(setup.genus_F());
  Rat lhs(2 * gf - 2);
  Rat twice_genus = lhs / Rat(static_cast<long long>(grp.size())) - sum + Rat(2);
  Rat genus = twice_genus * Rat(1, 2);
  if (!genus.is_integer() || genus.num < 0)
    throw std::runtime_error("quotient signature: Riemann-Hurwitz mismatch");
  if (genus_out) *genus_out = genus.num;
  return sig;
}

}  // namespace

std::vector<std::size_t> quotient_signature_F(const HyperellipticSetup& setup) {
  std::vector<std::size_t> full(setup.lifted_group().size());
  std::iota(full.begin(), full.end(), 0);
  long long genus = -1;
  auto sig = signature_for(setup, full, &genus);
  if (genus != 0)
    throw std::runtime_error("quotient_signature_F: quotient by the full lifted group must be rational");
  return sig;
}

std::vector<std::size_t> quotient_signature_chosen(const HyperellipticSetup& setup) {
  return signature_for(setup, setup.group_indices(), nullptr);
}

long long quotient_genus_chosen(const HyperellipticSetup& setup) {
  long long genus = -1;
  signature_for(setup, setup.group_indices(), &genus);
  return genus;
}

bool is_free_dihedral_orbit(unsigned n, const Rat& c) {
  if (n < 2) throw std::invalid_argument("is_free_dihedral_orbit: n >= 2");
  return !(c == Rat(2) || c == Rat(-2));
}

}  // namespace dblplane
