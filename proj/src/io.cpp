#include "toric/io.hpp"

#include <fstream>
#include <sstream>

namespace toric {

Int int_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    std::ostringstream os;
    os << j;
    return Int(os.str());
  }
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw InputError("not an integer: \"" + j.get<std::string>() + "\"");
    }
  }
  if (j.is_number_float())
    throw InputError("floating point numbers are not allowed; use integers or "
                     "[numerator, denominator] pairs");
  throw InputError("expected an integer, got " + std::string(j.type_name()));
}

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Rat rat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InputError("expected a rational as [numerator, denominator]");
  Int num = int_from_json(j[0]);
  Int den = int_from_json(j[1]);
  if (den == 0) throw InputError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

json rat_to_json(const Rat& v) {
  return json::array({int_to_json(Int(v.get_num())), int_to_json(Int(v.get_den()))});
}

namespace {

std::vector<Int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(int_from_json(e));
  return out;
}

json int_vector_to_json(std::span<const Int> v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

json index_set_to_json(const ConeIndexSet& s) {
  json a = json::array();
  for (std::size_t i : s) a.push_back(i);
  return a;
}

const json& require_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

FanDocument parse_fan_document(const json& j) {
  if (!j.is_object()) throw InputError("fan document must be a JSON object");
  FanDocument doc;
  const json& rank = require_field(j, "lattice_rank");
  Int r = int_from_json(rank);
  if (r < 1 || r > 64) throw InputError("lattice_rank out of range");
  doc.lattice_rank = r.get_ui();

  const json& rays = require_field(j, "rays");
  if (!rays.is_array() || rays.empty())
    throw InputError("\"rays\" must be a nonempty array");
  for (const auto& ray : rays) {
    auto v = int_vector(ray, "ray");
    if (v.size() != doc.lattice_rank)
      throw InputError("ray has " + std::to_string(v.size()) +
                       " coordinates, expected " +
                       std::to_string(doc.lattice_rank));
    doc.rays.push_back(std::move(v));
  }

  const json& cones = require_field(j, "max_cones");
  if (!cones.is_array() || cones.empty())
    throw InputError("\"max_cones\" must be a nonempty array");
  for (const auto& cone : cones) {
    if (!cone.is_array()) throw InputError("cone must be an array of ray indices");
    ConeIndexSet c;
    for (const auto& e : cone) {
      Int idx = int_from_json(e);
      if (idx < 0 || idx >= Int(static_cast<unsigned long>(doc.rays.size())))
        throw InputError("cone index " + idx.get_str() + " out of range");
      c.push_back(idx.get_ui());
    }
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw InputError("cone repeats a ray index");
    doc.max_cones.push_back(std::move(c));
  }

  if (j.contains("superlattice_gens")) {
    const json& gens = j["superlattice_gens"];
    if (!gens.is_array()) throw InputError("\"superlattice_gens\" must be an array");
    for (const auto& g : gens) {
      if (!g.is_array() || g.size() != doc.lattice_rank)
        throw InputError("superlattice generator must have lattice_rank entries");
      std::vector<Rat> v;
      for (const auto& e : g) v.push_back(rat_from_json(e));
      doc.superlattice_gens.push_back(std::move(v));
    }
  }
  return doc;
}

json to_json(const FanDocument& doc) {
  json j;
  j["lattice_rank"] = doc.lattice_rank;
  json rays = json::array();
  for (const auto& r : doc.rays) rays.push_back(int_vector_to_json(r));
  j["rays"] = std::move(rays);
  json cones = json::array();
  for (const auto& c : doc.max_cones) cones.push_back(index_set_to_json(c));
  j["max_cones"] = std::move(cones);
  if (!doc.superlattice_gens.empty()) {
    json gens = json::array();
    for (const auto& g : doc.superlattice_gens) {
      json gen = json::array();
      for (const Rat& x : g) gen.push_back(rat_to_json(x));
      gens.push_back(std::move(gen));
    }
    j["superlattice_gens"] = std::move(gens);
  }
  return j;
}

Fan build_fan(const FanDocument& doc) {
  Fan fan;
  fan.lattice_rank = doc.lattice_rank;
  fan.rays = IntMatrix::from_rows(doc.rays, doc.lattice_rank);
  fan.max_cones = doc.max_cones;
  if (!doc.superlattice_gens.empty()) fan = refine_lattice(fan, doc.superlattice_gens);
  return fan;
}

SpecDocument parse_spec_document(const json& j) {
  if (!j.is_object()) throw InputError("spec document must be a JSON object");
  SpecDocument doc;
  const bool has_weights = j.contains("weights");
  const bool has_fan = j.contains("fan");
  if (has_weights == has_fan)
    throw InputError("spec must have exactly one of \"weights\" or \"fan\"");

  if (has_weights) {
    doc.weights = int_vector(j["weights"], "weights");
    doc.degrees = int_vector(require_field(j, "degrees"), "degrees");
    return doc;
  }

  const json& fan = j["fan"];
  if (fan.is_string())
    doc.fan_ref = fan.get<std::string>();
  else
    doc.fan_inline = parse_fan_document(fan);

  const json& classes = require_field(j, "degree_classes");
  if (!classes.is_array() || classes.empty())
    throw InputError("\"degree_classes\" must be a nonempty array");
  for (const auto& e : classes) {
    if (!e.is_object()) throw InputError("degree class must be an object");
    SpecDegree d;
    d.witness = int_vector(require_field(e, "witness"), "witness");
    if (e.contains("free")) d.free = int_vector(e["free"], "free");
    if (e.contains("torsion")) d.torsion = int_vector(e["torsion"], "torsion");
    doc.degree_classes.push_back(std::move(d));
  }
  return doc;
}

json to_json(const SpecDocument& doc) {
  json j;
  if (doc.weight_form()) {
    j["weights"] = int_vector_to_json(doc.weights);
    j["degrees"] = int_vector_to_json(doc.degrees);
    return j;
  }
  if (doc.fan_inline)
    j["fan"] = to_json(*doc.fan_inline);
  else
    j["fan"] = doc.fan_ref;
  json classes = json::array();
  for (const auto& d : doc.degree_classes) {
    json e;
    e["witness"] = int_vector_to_json(d.witness);
    if (d.free) e["free"] = int_vector_to_json(*d.free);
    if (d.torsion) e["torsion"] = int_vector_to_json(*d.torsion);
    classes.push_back(std::move(e));
  }
  j["degree_classes"] = std::move(classes);
  return j;
}

CiSpec build_ci_spec(const SpecDocument& doc, const std::filesystem::path& base_dir) {
  if (doc.weight_form())
    return make_weight_spec(WeightSystem(doc.weights), doc.degrees);

  Fan fan;
  if (doc.fan_inline) {
    fan = build_fan(*doc.fan_inline);
  } else {
    std::filesystem::path p = doc.fan_ref;
    if (p.is_relative()) p = base_dir / p;
    fan = build_fan(parse_fan_document(load_json_file(p)));
  }
  std::vector<std::vector<Int>> witnesses;
  for (const auto& d : doc.degree_classes) witnesses.push_back(d.witness);
  CiSpec spec = make_fan_spec(std::move(fan), std::move(witnesses));

  // optional declared classes must agree with the computed ones
  ClassGroupData cl = class_group(*spec.ambient_fan);
  for (std::size_t i = 0; i < doc.degree_classes.size(); ++i) {
    const auto& d = doc.degree_classes[i];
    const DivisorClass& computed = spec.fan_degrees[i].cls;
    if (d.free && *d.free != computed.free_part)
      throw InputError("degree class #" + std::to_string(i + 1) +
                       ": declared free part differs from the witness class " +
                       cl.describe_class(computed));
    if (d.torsion && *d.torsion != computed.torsion_part)
      throw InputError("degree class #" + std::to_string(i + 1) +
                       ": declared torsion part differs from the witness class " +
                       cl.describe_class(computed));
  }
  return spec;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    // translate the byte offset into line/column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < bytes.size(); ++i) {
      if (bytes[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(path.string() + ": parse error at line " +
                     std::to_string(line) + ", column " + std::to_string(col) +
                     ": " + e.what());
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return fnv1a_hex(bytes);
}

json to_json(const DivisorClass& c) {
  json j;
  j["free"] = int_vector_to_json(c.free_part);
  j["torsion"] = int_vector_to_json(c.torsion_part);
  return j;
}

json to_json(const ClassGroupData& cl) {
  json j;
  j["free_rank"] = cl.free_rank();
  j["torsion"] = int_vector_to_json(cl.torsion());
  j["group"] = cl.describe_group();
  json grading = json::array();
  for (std::size_t i = 0; i < cl.ray_count(); ++i)
    grading.push_back(to_json(cl.ray_class(i)));
  j["grading"] = std::move(grading);
  return j;
}

json to_json(const GroupD& d) {
  json j;
  j["torus_rank"] = d.torus_rank;
  j["finite_part"] = int_vector_to_json(d.finite_part);
  j["connected"] = d.connected();
  j["group"] = d.describe();
  return j;
}

json to_json(const IrrelevantLocus& z) {
  json j;
  json gens = json::array();
  for (const auto& g : z.generators) gens.push_back(index_set_to_json(g));
  j["generators"] = std::move(gens);
  json comps = json::array();
  for (const auto& c : z.components) comps.push_back(index_set_to_json(c));
  j["components"] = std::move(comps);
  return j;
}

json to_json(const GwpsClassification& c) {
  json j;
  j["kind"] = c.kind == GwpsKind::weighted_projective_space ? "wps" : "quotient";
  j["weights"] = int_vector_to_json(c.weights.weights);
  j["quotient_group"] = int_vector_to_json(c.quotient_group);
  j["name"] = c.describe();
  return j;
}

json to_json(const BettiPrediction& b) {
  json j;
  j["ambient"] = int_vector_to_json(b.ambient);
  j["ci_low"] = int_vector_to_json(b.ci_low);
  j["ci_dim"] = b.ci_dim;
  j["middle_lower_bound"] = int_to_json(b.middle_lower_bound);
  j["notes"] = b.notes;
  return j;
}

json to_json(const WellFormedReport& r) {
  json j;
  j["well_formed"] = r.well_formed;
  j["low_dim_caveat"] = r.low_dim_caveat;
  json strata = json::array();
  for (const auto& s : r.strata) {
    json e;
    e["modulus"] = int_to_json(s.modulus);
    e["members"] = index_set_to_json(s.members);
    e["degrees_cutting"] = s.degrees_cutting;
    e["dim_in_ci"] = s.dim_in_ci;
    e["pass"] = s.pass;
    strata.push_back(std::move(e));
  }
  j["strata"] = std::move(strata);
  return j;
}

json to_json(const SingularityReport& r) {
  json j;
  j["smooth"] = r.smooth();
  if (r.singular_codim) j["singular_codim"] = *r.singular_codim;
  j["isolated"] = r.isolated;
  if (r.terminal) j["terminal"] = *r.terminal;
  json cones = json::array();
  for (const auto& c : r.cones) {
    json e;
    e["cone"] = index_set_to_json(c.cone);
    e["smooth"] = c.smooth;
    cones.push_back(std::move(e));
  }
  j["cones"] = std::move(cones);
  return j;
}

json verdict_to_json(const TheoremVerdict& v) {
  json j;
  json flags;
  flags["q_factorial"] = flag_str(v.q_factorial);
  flags["complete"] = flag_str(v.complete);
  flags["ample_all"] = flag_str(v.ample_all);
  flags["fano"] = flag_str(v.fano);
  flags["dim_ge_2"] = flag_str(v.dim_ge_2);
  flags["well_formed"] = flag_str(v.well_formed);
  flags["pic_rank_one"] = flag_str(v.pic_rank_one);
  j["flags"] = std::move(flags);
  j["failed"] = v.failed;
  j["inconclusive"] = v.inconclusive;
  if (v.ambient) j["ambient"] = to_json(*v.ambient);
  if (v.strata) j["strata"] = to_json(*v.strata);
  if (v.fano_index_value) j["fano_index"] = int_to_json(*v.fano_index_value);
  j["conclusion"] = conclusion_str(v.conclusion);
  j["text"] = v.text;
  return j;
}

}  // namespace toric
