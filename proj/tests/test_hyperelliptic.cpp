#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "dblplane/hyperelliptic.hpp"

using namespace dblplane;

namespace {

HyperellipticSetup setup_Ia() {
  auto d2 = SphericalGroup::catalog(SphereKind::Dihedral, 2);
  return HyperellipticSetup::make(d2, 4, DeltaDivisor{{}, 2});
}

HyperellipticSetup setup_Ib() {
  auto d4 = SphericalGroup::catalog(SphereKind::Dihedral, 4);
  return HyperellipticSetup::make(d4, 4, DeltaDivisor{{}, 1});
}

HyperellipticSetup setup_IcId() {
  auto octa = SphericalGroup::catalog(SphereKind::Octahedral);
  return HyperellipticSetup::make(octa, 4, DeltaDivisor{{1}, 0});  // the 8-orbit
}

HyperellipticSetup setup_II() {
  auto ico = SphericalGroup::catalog(SphereKind::Icosahedral);
  return HyperellipticSetup::make(ico, 6, DeltaDivisor{{0}, 0});  // the 12-orbit
}

std::vector<HyperellipticSetup> all_setups(unsigned max_n) {
  std::vector<HyperellipticSetup> out;
  std::vector<SphericalGroup> spheres;
  for (unsigned n = 1; n <= max_n; ++n) spheres.push_back(SphericalGroup::catalog(SphereKind::Cyclic, n));
  for (unsigned n = 2; n <= max_n; ++n) spheres.push_back(SphericalGroup::catalog(SphereKind::Dihedral, n));
  spheres.push_back(SphericalGroup::catalog(SphereKind::Tetrahedral));
  spheres.push_back(SphericalGroup::catalog(SphereKind::Octahedral));
  spheres.push_back(SphericalGroup::catalog(SphereKind::Icosahedral));
  for (const auto& s : spheres)
    for (std::size_t d : {std::size_t{4}, std::size_t{6}})
      for (const auto& delta : delta_candidates(s, 2 * d)) {
        try {
          out.push_back(HyperellipticSetup::make(s, d, delta));
        } catch (const character_error&) {
        }
      }
  return out;
}

// Class index of elements with the given order whose fixed points lie in the
// orbit with the given id (npos: fixed points off every special orbit with
// that id meaning "don't care").
std::size_t class_with(const SphericalGroup& s, std::size_t order,
                       std::size_t orbit_with_fix) {
  for (std::size_t c = 0; c < s.classes().size(); ++c) {
    const auto& geo = s.geometry(c);
    if (geo.order != order) continue;
    if (geo.fixed_count[orbit_with_fix] > 0) return c;
  }
  REQUIRE(false);
  return npos;
}

// Independent oracle: count fixed points of an element through the census,
// as fixed cosets of the stabilizer subgroups.
std::size_t census_fixed_points(const HyperellipticSetup& setup, std::size_t x) {
  const Group& g0 = setup.lifted_group();
  std::size_t total = 0;
  for (const auto& co : setup.point_census()) {
    std::size_t hits = 0;
    for (std::size_t y = 0; y < g0.size(); ++y) {
      std::size_t conj = g0.multiply(g0.multiply(g0.inverse_of(y), x), y);
      if (std::binary_search(co.stabilizer.begin(), co.stabilizer.end(), conj)) ++hits;
    }
    total += hits / co.stabilizer.size();
  }
  return total;
}

}  // namespace

TEST_CASE("lambda values") {
  auto octa = SphericalGroup::catalog(SphereKind::Octahedral);
  std::size_t order4 = class_with(octa, 4, 0);  // face axes

  // degree 8 on the vertex orbit: two free 4-orbits, trivial character
  CHECK(compute_lambda(octa, DeltaDivisor{{1}, 0}, order4) == 1);
  // degree 12 on the edge orbit: three free 4-orbits, sign character
  CHECK(compute_lambda(octa, DeltaDivisor{{2}, 0}, order4) == -1);

  auto ico = SphericalGroup::catalog(SphereKind::Icosahedral);
  std::size_t order5 = class_with(ico, 5, 0);
  // both fixed points on the 12-orbit: canceling factors
  CHECK(compute_lambda(ico, DeltaDivisor{{0}, 0}, order5) == 1);

  CHECK(setup_Ia().lambda_trivial());
  CHECK(setup_Ib().lambda_trivial());
  CHECK(setup_IcId().lambda_trivial());
  CHECK(setup_II().lambda_trivial());
}

TEST_CASE("non-real character configurations are rejected") {
  auto z7 = SphericalGroup::catalog(SphereKind::Cyclic, 7);
  auto ds = delta_candidates(z7, 8);
  REQUIRE(ds.size() == 2);  // one pole plus a free orbit, either pole
  for (const auto& d : ds)
    CHECK_THROWS_AS(HyperellipticSetup::make(z7, 4, d), character_error);
}

TEST_CASE("lambda is multiplicative everywhere") {
  for (const auto& setup : all_setups(12)) {
    const auto& sphere = setup.sphere();
    const Group& g = sphere.group();
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        CHECK(setup.lambda(sphere.class_of(a)) * setup.lambda(sphere.class_of(b)) ==
              setup.lambda(sphere.class_of(g.multiply(a, b))));
  }
}

TEST_CASE("mu squared equals lambda on every lift") {
  for (const auto& setup : all_setups(10)) {
    const Group& g0 = setup.lifted_group();
    for (std::size_t e = 0; e < g0.size(); ++e) {
      const auto& lp = setup.pair(e);
      int lam = setup.lambda(setup.sphere().class_of(lp.base));
      CHECK(((lp.mu * 2) % 4 == 0 ? 1 : -1) == lam);
    }
  }
}

TEST_CASE("fixed points on F: the five families") {
  SUBCASE("Ia: the split lifts of the three involutions fix 4 points") {
    auto s = setup_Ia();
    const auto& gbar = s.sphere().group();
    CHECK(fixed_points_on_F(s, s.tau()) == 8);
    for (std::size_t b = 0; b < gbar.size(); ++b) {
      if (b == gbar.identity_index()) continue;
      CHECK(fixed_points_on_F(s, s.pair_index(b, 0)) == 4);
      CHECK(fixed_points_on_F(s, s.pair_index(b, 2)) == 0);
    }
  }
  SUBCASE("Ib: reflections split 4+0, odd rotations 0+4, the half turn 4+0") {
    auto s = setup_Ib();
    const auto& sphere = s.sphere();
    const auto& gbar = sphere.group();
    CHECK(fixed_points_on_F(s, s.tau()) == 8);
    for (std::size_t b = 0; b < gbar.size(); ++b) {
      if (b == gbar.identity_index()) continue;
      const auto& geo = sphere.geometry(sphere.class_of(b));
      std::size_t plus = fixed_points_on_F(s, s.pair_index(b, 0));
      std::size_t minus = fixed_points_on_F(s, s.pair_index(b, 2));
      if (geo.order == 2 && geo.fixed_count[0] == 0) {
        CHECK(plus == 4);   // (0, s r^i)
        CHECK(minus == 0);  // (1, s r^i)
      } else if (geo.order == 4) {
        CHECK(plus == 0);   // (0, r^{odd})
        CHECK(minus == 4);  // (1, r^{odd})
      } else {
        CHECK(geo.order == 2);
        CHECK(plus == 4);   // (0, r^2)
        CHECK(minus == 0);
      }
    }
  }
  SUBCASE("Ic/Id: transpositions 4+0, order four 0+4, three-cycles 2+2") {
    auto s = setup_IcId();
    const auto& sphere = s.sphere();
    const auto& gbar = sphere.group();
    CHECK(fixed_points_on_F(s, s.tau()) == 8);
    for (std::size_t b = 0; b < gbar.size(); ++b) {
      if (b == gbar.identity_index()) continue;
      const auto& geo = sphere.geometry(sphere.class_of(b));
      std::size_t plus = fixed_points_on_F(s, s.pair_index(b, 0));
      std::size_t minus = fixed_points_on_F(s, s.pair_index(b, 2));
      if (geo.order == 3) {
        CHECK(plus == 2);
        CHECK(minus == 2);
      } else if (geo.order == 4) {
        CHECK(plus == 0);
        CHECK(minus == 4);
      } else {
        CHECK(plus == 4);  // transpositions and double cycles
        CHECK(minus == 0);
      }
    }
  }
  SUBCASE("II: five-cycles 2+2, three-cycles 4+0, involutions 0+4") {
    auto s = setup_II();
    const auto& sphere = s.sphere();
    const auto& gbar = sphere.group();
    CHECK(fixed_points_on_F(s, s.tau()) == 12);
    for (std::size_t b = 0; b < gbar.size(); ++b) {
      if (b == gbar.identity_index()) continue;
      const auto& geo = sphere.geometry(sphere.class_of(b));
      std::size_t plus = fixed_points_on_F(s, s.pair_index(b, 0));
      std::size_t minus = fixed_points_on_F(s, s.pair_index(b, 2));
      if (geo.order == 5) {
        CHECK(plus == 2);
        CHECK(minus == 2);
      } else if (geo.order == 3) {
        CHECK(plus == 4);
        CHECK(minus == 0);
      } else {
        CHECK(plus == 0);
        CHECK(minus == 4);
      }
    }
  }
  SUBCASE("identity query is an error") {
    auto s = setup_Ia();
    CHECK_THROWS_AS(fixed_points_on_F(s, s.lifted_group().identity_index()),
                    std::invalid_argument);
  }
}

TEST_CASE("even-order lifts off the branch divisor split 4+0 or 2+2 by lambda") {
  for (const auto& setup : all_setups(10)) {
    const auto& sphere = setup.sphere();
    for (std::size_t b = 0; b < sphere.group().size(); ++b) {
      if (b == sphere.group().identity_index()) continue;
      std::size_t c = sphere.class_of(b);
      const auto& geo = sphere.geometry(c);
      if (geo.order % 2 != 0) continue;
      std::size_t in_delta = 0;
      for (std::size_t id : setup.delta().special_ids)
        in_delta += geo.fixed_count[id];
      if (in_delta != 0) continue;
      unsigned mu0 = setup.lambda(c) == 1 ? 0 : 1;
      std::size_t fa = fixed_points_on_F(setup, setup.pair_index(b, mu0));
      std::size_t fb = fixed_points_on_F(setup, setup.pair_index(b, mu0 + 2));
      if (setup.lambda(c) == 1) {
        CHECK(((fa == 4 && fb == 0) || (fa == 0 && fb == 4)));
      } else {
        CHECK(fa == 2);
        CHECK(fb == 2);
      }
    }
  }
}

TEST_CASE("set A") {
  SUBCASE("Ia: tau and the three split involutions") {
    auto s = setup_Ia();
    auto a = set_A(s);
    REQUIRE(a.size() == 4);
    CHECK(std::binary_search(a.begin(), a.end(), s.tau()));
    for (std::size_t e : a) {
      if (e == s.tau()) continue;
      CHECK(s.pair(e).mu == 0);
      CHECK(s.lifted_group().element_order(e) == 2);
    }
  }
  SUBCASE("identity never belongs to A") {
    for (const auto& setup : all_setups(8)) {
      auto a = set_A(setup);
      CHECK(!std::binary_search(a.begin(), a.end(),
                                setup.lifted_group().identity_index()));
    }
  }
}

TEST_CASE("quotient signatures with Riemann-Hurwitz cross-check") {
  CHECK(quotient_signature_F(setup_Ia()) == std::vector<std::size_t>{2, 2, 2, 2, 2});
  CHECK(quotient_signature_F(setup_Ib()) == std::vector<std::size_t>{2, 2, 2, 4});
  CHECK(quotient_signature_F(setup_IcId()) == std::vector<std::size_t>{2, 4, 6});
  CHECK(quotient_signature_F(setup_II()) == std::vector<std::size_t>{2, 3, 10});
}

TEST_CASE("census stabilizers are cyclic of the doubled order over the branch") {
  // Over a branch point with base stabilizer of order s the curve-point
  // stabilizer is cyclic of order 2s.
  auto s = setup_II();
  bool saw = false;
  for (const auto& co : s.point_census()) {
    if (!co.weierstrass || co.base != "orbit0") continue;
    saw = true;
    CHECK(co.stabilizer.size() == 10);
    bool cyclic = false;
    for (std::size_t e : co.stabilizer)
      if (s.lifted_group().element_order(e) == 10) cyclic = true;
    CHECK(cyclic);
  }
  CHECK(saw);

  // The excluded octahedral degree-12 configuration: the stabilizer over a
  // branch point is cyclic of order 4, so transpositions only lift to
  // order-4 elements.
  auto octa = SphericalGroup::catalog(SphereKind::Octahedral);
  auto bad = HyperellipticSetup::make(octa, 6, DeltaDivisor{{2}, 0});
  for (const auto& co : bad.point_census()) {
    if (!co.weierstrass) continue;
    CHECK(co.stabilizer.size() == 4);
    bool has_order4 = false;
    for (std::size_t e : co.stabilizer)
      if (bad.lifted_group().element_order(e) == 4) has_order4 = true;
    CHECK(has_order4);
  }
  CHECK(free_involutions(bad).size() == 3);  // only the split double-cycle lifts
}

TEST_CASE("fixed-point table agrees with the census count") {
  for (const auto& setup : all_setups(10)) {
    const Group& g0 = setup.lifted_group();
    for (std::size_t e = 0; e < g0.size(); ++e) {
      if (e == g0.identity_index()) continue;
      CHECK(fixed_points_on_F(setup, e) == census_fixed_points(setup, e));
    }
  }
}

TEST_CASE("Lefschetz sum rule on F for every setup") {
  for (const auto& setup : all_setups(12)) {
    const Group& g0 = setup.lifted_group();
    long long total = 0;
    for (std::size_t e = 0; e < g0.size(); ++e)
      if (e != g0.identity_index())
        total += (long long)fixed_points_on_F(setup, e);
    long long expected = 0;
    for (std::size_t m : quotient_signature_F(setup))
      expected += (long long)(g0.size() - g0.size() / m);
    CHECK(total == expected);
  }
}

TEST_CASE("free dihedral orbit test") {
  CHECK(is_free_dihedral_orbit(4, Rat(0)));
  CHECK_FALSE(is_free_dihedral_orbit(4, Rat(2)));
  CHECK_FALSE(is_free_dihedral_orbit(3, Rat(-2)));

  // Oracle: substitute t = (x1/x0)^n; the locus is free of size 2n exactly
  // when t^2 + c t + 1 has two distinct roots, neither equal to +-1.
  auto oracle = [](const Rat& c) {
    Rat disc = c * c - Rat(4);
    Rat at_one = Rat(2) + c;    // t = 1
    Rat at_minus = Rat(2) - c;  // t = -1
    return !(disc == Rat(0)) && !(at_one == Rat(0)) && !(at_minus == Rat(0));
  };
  for (long long num = -9; num <= 9; ++num)
    for (long long den = 1; den <= 4; ++den)
      CHECK(is_free_dihedral_orbit(5, Rat(num, den)) == oracle(Rat(num, den)));
  // c = -2 gives the double root t = 1
  Rat c(-2);
  CHECK((c * c - Rat(4)) == Rat(0));
}

TEST_CASE("surjecting subgroups of the lifted group") {
  SUBCASE("Ia: the full group and four graphs") {
    auto subs = setup_Ia().surjecting();
    CHECK(subs.size() == 5);
    CHECK(subs[0].size() == 8);
    for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i].size() == 4);
  }
  SUBCASE("II: the full group and the unique section") {
    auto subs = setup_II().surjecting();
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].size() == 120);
    CHECK(subs[1].size() == 60);
  }
  SUBCASE("with_group validates") {
    auto s = setup_Ia();
    CHECK_THROWS_AS(s.with_group({0, 1}), std::invalid_argument);
  }
}
