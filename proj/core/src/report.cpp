#include "dblplane/report.hpp"

#include <istream>
#include <sstream>

#include <json.hpp>

namespace dblplane {

namespace {

using nlohmann::json;

json group_json(const Group& g) {
  json out;
  out["name"] = recognize_group_name(g);
  out["order"] = g.size();
  out["abelian"] = g.is_abelian();
  json hist = json::object();
  for (auto& [ord, cnt] : g.order_histogram()) hist[std::to_string(ord)] = cnt;
  out["order_histogram"] = hist;
  return out;
}

json record_json(const SurfaceRecord& rec) {
  json out;
  out["g_F"] = rec.setup.genus_F();
  out["g_C"] = datum_genus(rec.datum);
  out["group"] = group_json(rec.datum.group);
  out["chi"] = rec.invariants.chi;
  out["q"] = rec.invariants.q;
  out["pg"] = rec.invariants.pg;
  out["Ksq"] = rec.invariants.ksq;
  out["k"] = rec.isolated_k;
  out["type"] = rec.type_tag;
  out["bicanonical"] = bicanonical_flag(rec);
  json fibres = json::array();
  for (const auto& f : rec.fibres) {
    json fj;
    fj["multiplicity"] = f.multiplicity;
    fj["sigma"] = sigma_behavior_name(f.behavior);
    fj["isolated"] = f.isolated;
    fibres.push_back(fj);
  }
  out["fibres"] = fibres;
  json cand;
  cand["sphere"] = sphere_kind_name(rec.provenance.kind, rec.provenance.n);
  cand["d"] = rec.provenance.d;
  cand["delta"] = delta_description(rec.setup.sphere(), rec.provenance.delta);
  cand["group_selector"] = rec.provenance.group_selector;
  cand["monodromy_classes"] = rec.provenance.monodromy_class_ids;
  out["candidate"] = cand;
  return out;
}

json moduli_json(const ModuliSummary& moduli) {
  json out;
  for (const auto& row : moduli.rows) {
    json rj;
    rj["dimension"] = row.dimension;
    rj["closed"] = row.closed;
    rj["open"] = row.open;
    rj["normal"] = row.normal;
    rj["irreducible"] = row.irreducible == Tri::Yes
                            ? "yes"
                            : (row.irreducible == Tri::No ? "no" : "unknown");
    if (!row.note.empty()) rj["note"] = row.note;
    out[row.type] = rj;
  }
  out["nonbirational_components"] = moduli.nonbirational_components;
  return out;
}

json plane_models_json(std::uint64_t seed) {
  json out;
  for (auto [type, name] : {std::pair{DuValType::I, "I"}, {DuValType::II, "II"}}) {
    auto spec = duval_spec(type);
    auto inv = canonical_resolution_invariants(spec);
    auto cert = duval_pg_check(type, seed);
    json tj;
    tj["branch_degree"] = 2 * spec.half_degree;
    tj["chi"] = inv.chi;
    tj["Ksq"] = inv.ksq;
    tj["obstruction_dimension"] = cert.obstruction_dimension;
    tj["pg"] = cert.pg;
    out[name] = tj;
  }
  return out;
}

json exclusions_json(const ClassificationReport& report) {
  json out = json::array();
  for (const auto& ex : report.exclusions) {
    json ej;
    ej["sphere"] = ex.sphere;
    ej["d"] = ex.d;
    ej["delta"] = ex.delta;
    ej["group"] = ex.group;
    ej["reason"] = ex.reason;
    out.push_back(ej);
  }
  return out;
}

}  // namespace

std::string render_full_json(const ClassificationReport& report,
                             const ModuliSummary& moduli,
                             std::uint64_t plane_model_seed) {
  json out;
  json records = json::array();
  for (const auto& rec : report.records) records.push_back(record_json(rec));
  out["records"] = records;
  out["exclusions"] = exclusions_json(report);
  out["moduli"] = moduli_json(moduli);
  out["plane_models"] = plane_models_json(plane_model_seed);
  json versions;
  versions["schema"] = 1;
  versions["dblplane"] = "1.0.0";
  out["versions"] = versions;
  return out.dump(2) + "\n";
}

std::string render_full_table(const ClassificationReport& report,
                              const ModuliSummary& moduli,
                              std::uint64_t plane_model_seed) {
  std::ostringstream os;
  os << "== records ==\n";
  for (const auto& rec : report.records) {
    os << "type " << rec.type_tag << ": g(F)=" << rec.setup.genus_F()
       << " g(C)=" << datum_genus(rec.datum) << " G="
       << recognize_group_name(rec.datum.group) << " (order "
       << rec.datum.group.size() << ")"
       << " chi=" << rec.invariants.chi << " q=" << rec.invariants.q
       << " pg=" << rec.invariants.pg << " K^2=" << rec.invariants.ksq
       << " k=" << rec.isolated_k << " bicanonical=" << bicanonical_flag(rec)
       << "\n";
    os << "  from " << sphere_kind_name(rec.provenance.kind, rec.provenance.n)
       << ", d=" << rec.provenance.d << ", delta="
       << delta_description(rec.setup.sphere(), rec.provenance.delta)
       << ", selector=" << rec.provenance.group_selector << "\n";
    os << "  fibres:";
    for (const auto& f : rec.fibres) {
      os << " (x" << f.multiplicity << " " << sigma_behavior_name(f.behavior);
      if (f.behavior == SigmaBehavior::InvariantIsolated)
        os << " " << f.isolated << " isolated";
      os << ")";
    }
    os << "\n";
  }
  os << "== moduli ==\n";
  for (const auto& row : moduli.rows) {
    os << "D_" << row.type << ": dim=" << row.dimension
       << " closed=" << (row.closed ? "yes" : "no")
       << " open=" << (row.open ? "yes" : "no")
       << " normal=" << (row.normal ? "yes" : "no") << " irreducible="
       << (row.irreducible == Tri::Yes
               ? "yes"
               : (row.irreducible == Tri::No ? "no" : "unknown"))
       << "\n";
  }
  os << "non-birational bicanonical locus: " << moduli.nonbirational_components
     << " irreducible components\n";
  os << "== plane models ==\n";
  for (auto [type, name] : {std::pair{DuValType::I, "I"}, {DuValType::II, "II"}}) {
    auto inv = canonical_resolution_invariants(duval_spec(type));
    auto cert = duval_pg_check(type, plane_model_seed);
    os << "type " << name << ": chi=" << inv.chi << " K^2=" << inv.ksq
       << " pg=" << cert.pg << (cert.pg == 0 ? " (certified zero)" : "") << "\n";
  }
  os << "== exclusions (" << report.exclusions.size() << ") ==\n";
  for (const auto& ex : report.exclusions)
    os << ex.sphere << " d=" << ex.d << " delta=" << ex.delta << " G=" << ex.group
       << ": " << ex.reason << "\n";
  return os.str();
}

std::string candidate_file_text(const SurfaceRecord& record) {
  std::ostringstream os;
  const auto& prov = record.provenance;
  os << "# candidate description\n";
  os << "sphere";
  switch (prov.kind) {
    case SphereKind::Cyclic: os << " cyclic " << prov.n; break;
    case SphereKind::Dihedral: os << " dihedral " << prov.n; break;
    case SphereKind::Tetrahedral: os << " tetrahedral"; break;
    case SphereKind::Octahedral: os << " octahedral"; break;
    case SphereKind::Icosahedral: os << " icosahedral"; break;
  }
  os << "\n";
  os << "d " << prov.d << "\n";
  os << "delta";
  for (std::size_t id : prov.delta.special_ids) os << " special " << id;
  os << " free " << prov.delta.free_multiplicity << "\n";
  if (prov.group_selector == 0)
    os << "group full\n";
  else
    os << "group section " << prov.group_selector << "\n";
  os << "monodromy";
  for (std::size_t c : prov.monodromy_class_ids) os << " " << c;
  os << "\n";
  return os.str();
}

CandidateSpec candidate_of_record(const SurfaceRecord& record) {
  CandidateSpec spec;
  spec.kind = record.provenance.kind;
  spec.n = record.provenance.n;
  spec.d = record.provenance.d;
  spec.delta = record.provenance.delta;
  spec.group_selector = record.provenance.group_selector;
  spec.monodromy_class_ids = record.provenance.monodromy_class_ids;
  return spec;
}

CandidateSpec parse_candidate_file(std::istream& in) {
  CandidateSpec spec;
  bool have_sphere = false, have_d = false, have_mono = false;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "sphere") {
      std::string kind;
      if (!(ls >> kind)) throw std::invalid_argument("candidate: bad sphere line");
      if (kind == "cyclic") {
        spec.kind = SphereKind::Cyclic;
        if (!(ls >> spec.n)) throw std::invalid_argument("candidate: cyclic needs n");
      } else if (kind == "dihedral") {
        spec.kind = SphereKind::Dihedral;
        if (!(ls >> spec.n)) throw std::invalid_argument("candidate: dihedral needs n");
      } else if (kind == "tetrahedral") {
        spec.kind = SphereKind::Tetrahedral;
      } else if (kind == "octahedral") {
        spec.kind = SphereKind::Octahedral;
      } else if (kind == "icosahedral") {
        spec.kind = SphereKind::Icosahedral;
      } else {
        throw std::invalid_argument("candidate: unknown sphere kind '" + kind + "'");
      }
      have_sphere = true;
    } else if (tok == "d") {
      if (!(ls >> spec.d)) throw std::invalid_argument("candidate: bad d line");
      have_d = true;
    } else if (tok == "delta") {
      std::string kw;
      while (ls >> kw) {
        if (kw == "special") {
          std::size_t id;
          if (!(ls >> id)) throw std::invalid_argument("candidate: bad delta special");
          spec.delta.special_ids.push_back(id);
        } else if (kw == "free") {
          if (!(ls >> spec.delta.free_multiplicity))
            throw std::invalid_argument("candidate: bad delta free");
        } else {
          throw std::invalid_argument("candidate: bad delta token '" + kw + "'");
        }
      }
    } else if (tok == "group") {
      std::string kw;
      if (!(ls >> kw)) throw std::invalid_argument("candidate: bad group line");
      if (kw == "full") {
        spec.group_selector = 0;
      } else if (kw == "section") {
        if (!(ls >> spec.group_selector) || spec.group_selector == 0)
          throw std::invalid_argument("candidate: bad section index");
      } else {
        throw std::invalid_argument("candidate: bad group keyword '" + kw + "'");
      }
    } else if (tok == "monodromy") {
      std::size_t c;
      while (ls >> c) spec.monodromy_class_ids.push_back(c);
      have_mono = true;
    } else {
      throw std::invalid_argument("candidate: unknown keyword '" + tok + "'");
    }
  }
  if (!have_sphere || !have_d || !have_mono)
    throw std::invalid_argument("candidate: missing sphere, d, or monodromy");
  return spec;
}

}  // namespace dblplane
