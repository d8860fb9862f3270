#include "dblplane/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "dblplane/moduli.hpp"
#include "dblplane/plane_model.hpp"
#include "dblplane/report.hpp"

namespace dblplane {

namespace {

int write_output(const RunConfig& config, const std::string& text,
                 std::ostream& out, std::ostream& err) {
  if (config.out.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(config.out, std::ios::binary);
  if (!f) {
    err << "error: cannot open output file '" << config.out << "'\n";
    return 2;
  }
  f << text;
  return 0;
}

// Rebuild a candidate from its declarative description and re-run every
// check; the first failed condition is reported.
int verify_candidate(const CandidateSpec& spec, std::ostream& out,
                     std::ostream& err) {
  SphericalGroup sphere;
  try {
    sphere = SphericalGroup::catalog(spec.kind, spec.n);
  } catch (const std::exception& e) {
    err << "input error: sphere: " << e.what() << "\n";
    return 2;
  }
  for (std::size_t id : spec.delta.special_ids)
    if (id >= sphere.orbits().size() || !sphere.orbits()[id].desc.special) {
      err << "input error: delta: orbit " << id << " is not a special orbit\n";
      return 2;
    }
  if (delta_degree(sphere, spec.delta) != 2 * spec.d) {
    err << "input error: delta: total degree must be " << 2 * spec.d << "\n";
    return 2;
  }

  HyperellipticSetup setup;
  try {
    setup = HyperellipticSetup::make(sphere, spec.d, spec.delta);
  } catch (const character_error& e) {
    out << "FAIL lambda character: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "input error: setup: " << e.what() << "\n";
    return 2;
  }
  auto sections = setup.surjecting();
  if (spec.group_selector >= sections.size()) {
    err << "input error: group selector " << spec.group_selector
        << " out of range (have " << sections.size() << ")\n";
    return 2;
  }
  setup = setup.with_group(sections[spec.group_selector]);
  Group chosen = setup.chosen_group();

  auto classes = chosen.conjugacy_classes();
  for (std::size_t c : spec.monodromy_class_ids)
    if (c >= classes.size()) {
      err << "input error: monodromy class index " << c << " out of range\n";
      return 2;
    }

  auto vec = find_generating_vector_in_classes(chosen, spec.monodromy_class_ids);
  if (!vec) {
    out << "FAIL generating vector: no tuple with the requested classes has "
           "product one and generates the group\n";
    return 1;
  }
  BranchDatum datum;
  try {
    datum = make_branch_datum(chosen, *vec);
  } catch (const std::exception& e) {
    out << "FAIL branch datum: " << e.what() << "\n";
    return 1;
  }

  if (!check_free_diagonal(setup, datum)) {
    out << "FAIL free diagonal action: some element fixes points on both curves "
           "(A and B intersect)\n";
    return 1;
  }
  for (std::size_t g : datum.monodromy)
    if (chosen.element_order(g) != 2) {
      out << "FAIL branch orders: monodromy elements must have order 2\n";
      return 1;
    }
  auto a = set_A(setup);
  std::vector<std::size_t> local;
  for (std::size_t e : a)
    local.push_back(static_cast<std::size_t>(
        std::lower_bound(setup.group_indices().begin(), setup.group_indices().end(), e) -
        setup.group_indices().begin()));
  if (!chosen.is_generating(local)) {
    out << "FAIL generation: elements with fixed points on F do not generate\n";
    return 1;
  }
  if (!chosen.is_generating(datum.monodromy)) {
    out << "FAIL generation: monodromies do not generate\n";
    return 1;
  }

  SurfaceRecord rec = make_record(setup, datum);
  out << "verified candidate: g(F)=" << rec.setup.genus_F()
      << " g(C)=" << datum_genus(rec.datum)
      << " |G|=" << rec.datum.group.size() << " chi=" << rec.invariants.chi
      << " q=" << rec.invariants.q << " pg=" << rec.invariants.pg
      << " K^2=" << rec.invariants.ksq << " k=" << rec.isolated_k << "\n";
  bool ok = rec.invariants.chi == 1 && rec.invariants.q == 0 &&
            rec.invariants.pg == 0 && rec.invariants.ksq == 8 &&
            (rec.isolated_k == 12 || rec.isolated_k == 10);
  if (!ok) {
    out << "FAIL invariants: expected chi=1 q=0 pg=0 K^2=8 and k in {10,12}\n";
    return 1;
  }
  out << "OK\n";
  return 0;
}

int run_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](bool ok, const std::string& name) {
    out << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  // Catalog identities: construction throws if orbit-stabilizer, the Euler
  // identity, or the fixed-point census fails.
  bool catalog_ok = true;
  std::vector<SphericalGroup> spheres;
  try {
    for (unsigned n = 1; n <= 12; ++n) spheres.push_back(SphericalGroup::catalog(SphereKind::Cyclic, n));
    for (unsigned n = 2; n <= 12; ++n) spheres.push_back(SphericalGroup::catalog(SphereKind::Dihedral, n));
    spheres.push_back(SphericalGroup::catalog(SphereKind::Tetrahedral));
    spheres.push_back(SphericalGroup::catalog(SphereKind::Octahedral));
    spheres.push_back(SphericalGroup::catalog(SphereKind::Icosahedral));
  } catch (const std::exception&) {
    catalog_ok = false;
  }
  check(catalog_ok, "rotation catalog identities");

  // Character property and fixed-point sum rule over every buildable setup.
  bool lambda_ok = true, lefschetz_ok = true;
  for (const auto& sphere : spheres) {
    for (std::size_t d : {std::size_t{4}, std::size_t{6}}) {
      for (const auto& delta : delta_candidates(sphere, 2 * d)) {
        HyperellipticSetup setup;
        try {
          setup = HyperellipticSetup::make(sphere, d, delta);
        } catch (const character_error&) {
          continue;
        }
        const Group& gbar = sphere.group();
        for (std::size_t a = 0; a < gbar.size() && lambda_ok; ++a)
          for (std::size_t b = 0; b < gbar.size(); ++b) {
            int la = setup.lambda(sphere.class_of(a));
            int lb = setup.lambda(sphere.class_of(b));
            if (la * lb != setup.lambda(sphere.class_of(gbar.multiply(a, b)))) {
              lambda_ok = false;
              break;
            }
          }
        long long total = 0;
        const Group& g0 = setup.lifted_group();
        for (std::size_t e = 0; e < g0.size(); ++e)
          if (e != g0.identity_index())
            total += static_cast<long long>(fixed_points_on_F(setup, e));
        long long expected = 0;
        for (std::size_t mi : quotient_signature_F(setup))
          expected += static_cast<long long>(g0.size() - g0.size() / mi);
        if (total != expected) lefschetz_ok = false;
      }
    }
  }
  check(lambda_ok, "lambda is multiplicative on every setup");
  check(lefschetz_ok, "fixed-point sum rule on F for every setup");

  // Randomized covers: sum rule on C.
  bool cover_ok = true;
  std::mt19937_64 rng(12345);
  std::vector<Group> pool;
  for (const auto& s : spheres)
    if (s.group().size() >= 2 && s.group().size() <= 60) pool.push_back(s.group());
  std::size_t tested = 0;
  while (tested < 220) {
    const Group& g = pool[tested % pool.size()];
    auto datum = random_branch_datum(g, rng);
    if (!datum) continue;
    long long total = 0;
    for (std::size_t e = 1; e < g.size(); ++e)
      total += static_cast<long long>(fixed_points_on_C(*datum, e));
    long long expected = 0;
    for (std::size_t gi : datum->monodromy)
      expected += static_cast<long long>(g.size() - g.size() / g.element_order(gi));
    if (total != expected) cover_ok = false;
    ++tested;
  }
  check(cover_ok, "fixed-point sum rule on 220 randomized covers");

  // Generic-coordinate independence of the rank engine.
  bool rank_ok = true;
  for (auto type : {DuValType::I, DuValType::II}) {
    auto c1 = duval_pg_check(type, 11);
    auto c2 = duval_pg_check(type, 77);
    if (c1.obstruction_dimension != c2.obstruction_dimension) rank_ok = false;
  }
  check(rank_ok, "linear-system dimensions agree across generic samples");

  out << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::Classify: {
      SearchBounds bounds;
      bounds.max_n = config.bounds_n;
      bounds.r_cap = config.r_cap;
      bounds.order_cap = config.order_cap;
      bounds.threads = config.threads;
      ClassificationReport report;
      try {
        report = enumerate_candidates(bounds);
      } catch (const std::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
      }
      ModuliSummary moduli;
      try {
        moduli = moduli_summary(report);
      } catch (const std::exception& e) {
        err << "verification mismatch: " << e.what() << "\n";
        return 1;
      }
      if (!verify_uniqueness(report)) {
        err << "verification mismatch: genus pairs are not swap-free\n";
        return 1;
      }
      for (const auto& rec : report.records) {
        if (!(rec.invariants.chi == 1 && rec.invariants.q == 0 &&
              rec.invariants.pg == 0 && rec.invariants.ksq == 8)) {
          err << "verification mismatch: record with unexpected invariants\n";
          return 1;
        }
      }
      if (!config.write_candidates.empty()) {
        std::filesystem::create_directories(config.write_candidates);
        for (const auto& rec : report.records) {
          std::string name = rec.type_tag;
          for (auto& ch : name) ch = static_cast<char>(std::tolower(ch));
          std::ofstream f(std::filesystem::path(config.write_candidates) /
                          (name + ".cand"));
          f << candidate_file_text(rec);
        }
      }
      std::string text = config.format == "json"
                             ? render_full_json(report, moduli, config.seed)
                             : render_full_table(report, moduli, config.seed);
      return write_output(config, text, out, err);
    }
    case Command::Verify: {
      std::ifstream f(config.input);
      if (!f) {
        err << "input error: cannot read candidate file '" << config.input << "'\n";
        return 2;
      }
      CandidateSpec spec;
      try {
        spec = parse_candidate_file(f);
      } catch (const std::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
      }
      std::ostringstream body;
      int code = verify_candidate(spec, body, err);
      int wcode = write_output(config, body.str(), out, err);
      return code != 0 ? code : wcode;
    }
    case Command::PlaneModel: {
      std::ostringstream body;
      if (config.input == "I" || config.input == "II") {
        DuValType type = config.input == "I" ? DuValType::I : DuValType::II;
        auto spec = duval_spec(type);
        auto inv = canonical_resolution_invariants(spec);
        auto cert = duval_pg_check(type, config.seed);
        body << "type " << config.input << ": branch degree " << 2 * spec.half_degree
             << ", chi=" << inv.chi << ", K^2=" << inv.ksq
             << ", obstruction dimension=" << cert.obstruction_dimension
             << ", pg=" << cert.pg << (cert.pg == 0 ? " (certified zero)" : "")
             << "\n";
      } else {
        std::ifstream f(config.input);
        if (!f) {
          err << "input error: cannot read branch spec '" << config.input << "'\n";
          return 2;
        }
        BranchCurveSpec spec;
        try {
          spec = parse_branch_spec(f);
        } catch (const std::exception& e) {
          err << "input error: " << e.what() << "\n";
          return 2;
        }
        ResolutionInvariants inv;
        try {
          inv = canonical_resolution_invariants(spec);
        } catch (const std::exception& e) {
          err << "input error: " << e.what() << "\n";
          return 2;
        }
        body << "branch degree " << 2 * spec.half_degree << ", chi=" << inv.chi
             << ", K^2=" << inv.ksq << "\n";
      }
      return write_output(config, body.str(), out, err);
    }
    case Command::Moduli: {
      SearchBounds bounds;
      bounds.max_n = config.bounds_n;
      bounds.threads = config.threads;
      auto report = enumerate_candidates(bounds);
      ModuliSummary moduli;
      try {
        moduli = moduli_summary(report);
      } catch (const std::exception& e) {
        err << "verification mismatch: " << e.what() << "\n";
        return 1;
      }
      std::ostringstream body;
      for (const auto& row : moduli.rows) {
        body << "dim D_" << row.type << " = " << row.dimension
             << (row.irreducible == Tri::Unknown ? "  (irreducibility unknown)" : "")
             << "\n";
      }
      body << "non-birational bicanonical locus: " << moduli.nonbirational_components
           << " irreducible components\n";
      return write_output(config, body.str(), out, err);
    }
    case Command::Selftest: {
      std::ostringstream body;
      int code = run_selftest(body);
      int wcode = write_output(config, body.str(), out, err);
      return code != 0 ? code : wcode;
    }
  }
  return 2;
}

int run(const RunConfig& config) { return run(config, std::cout, std::cerr); }

}  // namespace dblplane
