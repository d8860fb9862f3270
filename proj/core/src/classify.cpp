#include "dblplane/classify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace dblplane {

namespace {

struct CandidateJob {
  SphereKind kind;
  unsigned n;
  std::size_t d;
  DeltaDivisor delta;
  std::size_t selector;  // index into surjecting()
};

struct JobOutcome {
  bool success = false;
  std::vector<Exclusion> exclusions;
  std::vector<SurfaceRecord> records;  // at most one
};

std::string group_label(const HyperellipticSetup& setup) {
  std::size_t order = setup.group_indices().size();
  std::string kind = setup.tau_in_group() ? "full" : "section";
  return kind + "(order " + std::to_string(order) + ")";
}

JobOutcome process_candidate(const HyperellipticSetup& base, const CandidateJob& job) {
  JobOutcome out;
  const SphericalGroup& sphere = base.sphere();
  auto sections = base.surjecting();
  HyperellipticSetup setup = base.with_group(sections[job.selector]);
  Exclusion ex{sphere.name(), job.d, delta_description(sphere, job.delta),
               group_label(setup), ""};

  Group chosen = setup.chosen_group();
  auto a = set_A(setup);
  if (a.empty() && chosen.size() > 1) {
    ex.reason = kReasonAEmpty;
    out.exclusions.push_back(ex);
    return out;
  }
  std::vector<std::size_t> a_local;
  for (std::size_t e : a)
    a_local.push_back(static_cast<std::size_t>(
        std::lower_bound(setup.group_indices().begin(), setup.group_indices().end(), e) -
        setup.group_indices().begin()));
  if (!chosen.is_generating(a_local)) {
    ex.reason = kReasonANotGenerating;
    out.exclusions.push_back(ex);
    return out;
  }

  auto b = free_involutions(setup);
  if (b.empty()) {
    ex.reason = kReasonBEmpty;
    out.exclusions.push_back(ex);
    return out;
  }
  std::vector<std::size_t> b_local;
  for (std::size_t e : b)
    b_local.push_back(static_cast<std::size_t>(
        std::lower_bound(setup.group_indices().begin(), setup.group_indices().end(), e) -
        setup.group_indices().begin()));
  if (!chosen.is_generating(b_local)) {
    ex.reason = kReasonBNotGenerating;
    out.exclusions.push_back(ex);
    return out;
  }

  // chi = 1 forces six branch points for genus 3 and five for genus 5.
  std::size_t r = (job.d == 4) ? 6 : 5;
  auto vec = find_generating_vector(chosen, b_local, r);
  if (!vec) {
    ex.reason = kReasonNoVector;
    out.exclusions.push_back(ex);
    return out;
  }

  try {
    BranchDatum datum = make_branch_datum(chosen, *vec);
    Provenance prov;
    prov.kind = job.kind;
    prov.n = job.n;
    prov.d = job.d;
    prov.delta = job.delta;
    prov.group_selector = job.selector;
    prov.monodromy_class_ids = monodromy_classes(datum);
    SurfaceRecord rec = make_record(setup, std::move(datum), std::move(prov));
    bool ok = rec.invariants.chi == 1 && rec.invariants.q == 0 &&
              rec.invariants.pg == 0 && rec.invariants.ksq == 8 &&
              (rec.isolated_k == 12 || rec.isolated_k == 10);
    if (!ok) {
      ex.reason = kReasonInvariants;
      out.exclusions.push_back(ex);
      return out;
    }
    out.success = true;
    out.records.push_back(std::move(rec));
  } catch (const std::exception& e) {
    ex.reason = std::string(kReasonInvariants) + ": " + e.what();
    out.exclusions.push_back(ex);
  }
  return out;
}

}  // namespace

const std::vector<TypeRow>& known_types() {
  static const std::vector<TypeRow> rows = {
      {"Ia", 3, 5, 8, "Z2^3"},       {"Ib", 3, 9, 16, "Z2xD4"},
      {"Ic", 3, 13, 24, "S4"},       {"Id", 3, 25, 48, "Z2xS4"},
      {"II", 5, 16, 60, "A5"},
  };
  return rows;
}

Group reference_group(const std::string& tag) {
  auto z2 = Group::from_generators(2, {Perm::from_cycles(2, {{0, 1}})}, 10, "Z2");
  if (tag == "Ia") {
    auto z2b = direct_product(z2, z2);
    return direct_product(z2, z2b, "Z2^3");
  }
  if (tag == "Ib") {
    auto d4 = Group::from_generators(
        4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{1, 3}})},
        10, "D4");
    return direct_product(z2, d4, "Z2xD4");
  }
  if (tag == "Ic")
    return Group::from_generators(
        4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})},
        30, "S4");
  if (tag == "Id") {
    auto s4 = Group::from_generators(
        4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})},
        30, "S4");
    return direct_product(z2, s4, "Z2xS4");
  }
  if (tag == "II")
    return Group::from_generators(
        5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1, 2}})},
        70, "A5");
  throw std::invalid_argument("reference_group: unknown tag " + tag);
}

std::string recognize_group_name(const Group& g) {
  for (const auto& row : known_types()) {
    if (g.size() != row.group_order) continue;
    if (is_isomorphic(g, reference_group(row.tag))) return row.group_name;
  }
  return "order" + std::to_string(g.size());
}

ClassificationReport enumerate_candidates(const SearchBounds& bounds) {
  ClassificationReport report;
  report.bounds = bounds;
  if (bounds.r_cap < 6)
    throw std::invalid_argument("enumerate_candidates: r cap below the forced branch counts");

  struct SetupSlot {
    HyperellipticSetup setup;
    std::vector<CandidateJob> jobs;
  };
  std::vector<SetupSlot> slots;

  std::vector<std::pair<SphereKind, unsigned>> kinds;
  for (unsigned n = 1; n <= bounds.max_n; ++n) kinds.emplace_back(SphereKind::Cyclic, n);
  for (unsigned n = 2; n <= bounds.max_n; ++n) kinds.emplace_back(SphereKind::Dihedral, n);
  kinds.emplace_back(SphereKind::Tetrahedral, 0);
  kinds.emplace_back(SphereKind::Octahedral, 0);
  kinds.emplace_back(SphereKind::Icosahedral, 0);

  for (auto [kind, n] : kinds) {
    SphericalGroup sphere = SphericalGroup::catalog(kind, n);
    if (2 * sphere.group().size() > bounds.order_cap)
      throw std::invalid_argument(
          "enumerate_candidates: lifted group order would exceed the cap");
    for (std::size_t d : {std::size_t{4}, std::size_t{6}}) {
      auto deltas = delta_candidates(sphere, 2 * d);
      if (deltas.empty()) {
        report.exclusions.push_back(
            Exclusion{sphere.name(), d, "-", "-", kReasonNoDelta});
        continue;
      }
      for (const auto& delta : deltas) {
        HyperellipticSetup base;
        try {
          base = HyperellipticSetup::make(sphere, d, delta);
        } catch (const character_error&) {
          report.exclusions.push_back(Exclusion{sphere.name(), d,
                                                delta_description(sphere, delta), "-",
                                                kReasonLambdaNotReal});
          continue;
        }
        SetupSlot slot{std::move(base), {}};
        std::size_t sections = slot.setup.surjecting().size();
        for (std::size_t sel = 0; sel < sections; ++sel)
          slot.jobs.push_back(CandidateJob{kind, n, d, delta, sel});
        slots.push_back(std::move(slot));
      }
    }
  }

  // Flattened deterministic job list; workers fill outcomes by index so the
  // merged report does not depend on scheduling.
  std::vector<std::pair<std::size_t, std::size_t>> flat;  // (slot, job)
  for (std::size_t s = 0; s < slots.size(); ++s)
    for (std::size_t j = 0; j < slots[s].jobs.size(); ++j) flat.emplace_back(s, j);
  std::vector<JobOutcome> outcomes(flat.size());

  auto worker_body = [&](std::atomic<std::size_t>& next) {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= flat.size()) break;
      auto [s, j] = flat[i];
      outcomes[i] = process_candidate(slots[s].setup, slots[s].jobs[j]);
    }
  };
  std::atomic<std::size_t> next{0};
  unsigned threads = std::max(1u, bounds.threads);
  if (threads == 1) {
    worker_body(next);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back([&] { worker_body(next); });
    for (auto& t : pool) t.join();
  }

  // Merge in job order; records deduplicated by (g_F, g_C, group isomorphism).
  for (auto& outcome : outcomes) {
    for (auto& ex : outcome.exclusions) report.exclusions.push_back(std::move(ex));
    for (auto& rec : outcome.records) {
      bool duplicate = false;
      for (const auto& kept : report.records) {
        if (kept.setup.genus_F() != rec.setup.genus_F()) continue;
        if (datum_genus(kept.datum) != datum_genus(rec.datum)) continue;
        if (!(iso_signature(kept.datum.group) == iso_signature(rec.datum.group)))
          continue;
        if (is_isomorphic(kept.datum.group, rec.datum.group)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) report.records.push_back(std::move(rec));
    }
  }

  for (auto& rec : report.records) {
    long long gf = static_cast<long long>(rec.setup.genus_F());
    long long gc = datum_genus(rec.datum);
    for (const auto& row : known_types()) {
      if (gf == row.g_f && gc == row.g_c &&
          rec.datum.group.size() == row.group_order &&
          is_isomorphic(rec.datum.group, reference_group(row.tag))) {
        rec.type_tag = row.tag;
        break;
      }
    }
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const SurfaceRecord& a, const SurfaceRecord& b) {
              if (a.setup.genus_F() != b.setup.genus_F())
                return a.setup.genus_F() < b.setup.genus_F();
              return datum_genus(a.datum) < datum_genus(b.datum);
            });
  return report;
}

bool verify_uniqueness(const ClassificationReport& report) {
  std::vector<std::pair<long long, long long>> pairs;
  for (const auto& rec : report.records)
    pairs.emplace_back(static_cast<long long>(rec.setup.genus_F()),
                       datum_genus(rec.datum));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      if (pairs[i] == pairs[j]) return false;
      if (pairs[i].first == pairs[j].second && pairs[i].second == pairs[j].first)
        return false;  // swapping the two pencils would identify the curves
    }
  return true;
}

std::string bicanonical_flag(const SurfaceRecord& record) {
  if (record.type_tag == "II") return "birational";
  if (record.type_tag == "Ia" || record.type_tag == "Ib" ||
      record.type_tag == "Ic" || record.type_tag == "Id")
    return "non-birational-degree-2";
  throw std::invalid_argument("bicanonical_flag: record is not classified");
}

}  // namespace dblplane
