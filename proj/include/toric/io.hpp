#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/coxcl.hpp"
#include "toric/fan.hpp"
#include "toric/gwps.hpp"
#include "toric/wci.hpp"

namespace toric {

using json = nlohmann::json;

/// On-disk fan description.  Exact arithmetic end to end: integers are
/// JSON numbers or decimal strings, rationals are [numerator,
/// denominator] pairs; floats are rejected.
struct FanDocument {
  std::size_t lattice_rank = 0;
  std::vector<std::vector<Int>> rays;
  std::vector<ConeIndexSet> max_cones;
  std::vector<std::vector<Rat>> superlattice_gens;  // optional

  bool operator==(const FanDocument&) const = default;
};

FanDocument parse_fan_document(const json& j);
json to_json(const FanDocument& doc);

/// Materializes the fan; superlattice generators are applied through
/// refine_lattice.
Fan build_fan(const FanDocument& doc);

struct SpecDegree {
  std::vector<Int> witness;
  std::optional<std::vector<Int>> free;     // cross-checked when present
  std::optional<std::vector<Int>> torsion;  // cross-checked when present
  bool operator==(const SpecDegree&) const = default;
};

/// On-disk complete intersection description: {weights, degrees} or
/// {fan, degree_classes}.
struct SpecDocument {
  std::vector<Int> weights;
  std::vector<Int> degrees;

  std::string fan_ref;  // path, resolved against the spec file directory
  std::optional<FanDocument> fan_inline;
  std::vector<SpecDegree> degree_classes;

  bool weight_form() const { return !weights.empty(); }
  bool operator==(const SpecDocument&) const = default;
};

SpecDocument parse_spec_document(const json& j);
json to_json(const SpecDocument& doc);

CiSpec build_ci_spec(const SpecDocument& doc, const std::filesystem::path& base_dir);

/// Parses a JSON file; syntax errors surface as InputError with the
/// line and column.
json load_json_file(const std::filesystem::path& path);

std::string fnv1a_hex(std::string_view bytes);
std::string file_digest(const std::filesystem::path& path);

Int int_from_json(const json& j);
json int_to_json(const Int& v);
Rat rat_from_json(const json& j);
json rat_to_json(const Rat& v);

json to_json(const DivisorClass& c);
json to_json(const ClassGroupData& cl);
json to_json(const GroupD& d);
json to_json(const IrrelevantLocus& z);
json to_json(const GwpsClassification& c);
json to_json(const BettiPrediction& b);
json to_json(const WellFormedReport& r);
json to_json(const SingularityReport& r);
json verdict_to_json(const TheoremVerdict& v);

}  // namespace toric
