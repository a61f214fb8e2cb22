#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "toric/corpus.hpp"
#include "toric/io.hpp"
#include "toric/verify.hpp"
#include "toric/version.hpp"

namespace fs = std::filesystem;
using namespace toric;

namespace {

#ifndef TORIC_DEFAULT_CORPUS_DIR
#define TORIC_DEFAULT_CORPUS_DIR "corpus"
#endif

struct Options {
  bool json = false;
  std::uint64_t budget = 1'000'000;
};

json envelope(const fs::path& file) {
  json j;
  j["tool_version"] = kVersion;
  j["input_digest"] = file_digest(file);
  return j;
}

Fan load_valid_fan(const fs::path& file) {
  Fan fan = build_fan(parse_fan_document(load_json_file(file)));
  ValidationReport rep = validate(fan);
  if (!rep.ok())
    throw InputError(file.string() + ": fan is invalid: " + rep.summary());
  return fan;
}

std::string monomial_str(const ConeIndexSet& idx) {
  std::string s;
  for (std::size_t i : idx) {
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
  }
  return s.empty() ? "1" : s;
}

std::string vanishing_str(const ConeIndexSet& idx) {
  std::string s = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += " = ";
    s += "x" + std::to_string(idx[k]);
  }
  return s + " = 0}";
}

int cmd_cl(const fs::path& file, const Options& opt) {
  Fan fan = load_valid_fan(file);
  ClassGroupData cl = class_group(fan);
  GroupD d = group_D(cl);
  IrrelevantLocus z = irrelevant_locus(fan);

  if (opt.json) {
    json j = envelope(file);
    j["class_group"] = to_json(cl);
    j["group_d"] = to_json(d);
    j["irrelevant_locus"] = to_json(z);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "Cl(Y) = " << cl.describe_group() << "\n";
  std::cout << "grading of the Cox ring:\n";
  for (std::size_t i = 0; i < cl.ray_count(); ++i)
    std::cout << "  deg x" << i << " = " << cl.describe_class(cl.ray_class(i)) << "\n";
  std::cout << "D = Hom(Cl(Y), C*) = " << d.describe()
            << (d.connected() ? "  (connected)" : "  (not connected)") << "\n";
  std::cout << "irrelevant locus Z = V(";
  for (std::size_t k = 0; k < z.generators.size(); ++k) {
    if (k) std::cout << ", ";
    std::cout << monomial_str(z.generators[k]);
  }
  std::cout << ")";
  if (z.is_origin(fan.ray_count()))
    std::cout << " = {0}";
  else if (!z.components.empty()) {
    std::cout << " = ";
    for (std::size_t k = 0; k < z.components.size(); ++k) {
      if (k) std::cout << " u ";
      std::cout << vanishing_str(z.components[k]);
    }
  }
  std::cout << "\n";
  return 0;
}

int cmd_classify(const fs::path& file, const Options& opt) {
  Fan fan = load_valid_fan(file);
  if (!is_gwps(fan)) {
    if (opt.json) {
      json j = envelope(file);
      j["gwps"] = false;
      j["reason"] = "ray count " + std::to_string(fan.ray_count()) +
                    " != lattice rank + 1 = " +
                    std::to_string(fan.lattice_rank + 1);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "not a generalized weighted projective space (b = "
                << fan.ray_count() << " != N+1 = " << fan.lattice_rank + 1
                << ")\n";
    }
    return 0;
  }
  GwpsClassification c = classify(fan);
  if (opt.json) {
    json j = envelope(file);
    j["gwps"] = true;
    j["classification"] = to_json(c);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (c.kind == GwpsKind::weighted_projective_space
                      ? "weighted projective space: "
                      : "quotient of a weighted projective space: ")
              << c.describe() << "\n";
  }
  return 0;
}

int cmd_wf(const fs::path& file, const Options& opt) {
  SpecDocument doc = parse_spec_document(load_json_file(file));
  if (!doc.weight_form())
    throw InputError("wf expects a weight-system spec ({weights, degrees})");
  WeightSystem w(doc.weights);
  for (std::size_t j = 0; j < doc.degrees.size(); ++j)
    if (doc.degrees[j] <= 0)
      throw InputError("degree #" + std::to_string(j + 1) + " must be positive");

  const bool wwf = weights_well_formed(w);
  WellFormedReport rep = wci_well_formed(w, doc.degrees);
  Int index = fano_index(w, doc.degrees);

  if (opt.json) {
    json j = envelope(file);
    j["weights"] = to_json(GwpsClassification{
        GwpsKind::weighted_projective_space, w, {}})["weights"];
    j["weights_well_formed"] = wwf;
    j["report"] = to_json(rep);
    j["fano_index"] = int_to_json(index);
    j["fano"] = index > 0;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "ambient " << w.wps_name() << ": weights "
            << (wwf ? "well formed" : "NOT well formed") << "\n";
  if (!rep.strata.empty()) {
    std::cout << "strata of the generic complete intersection:\n";
    for (const auto& s : rep.strata) {
      std::cout << "  m=" << s.modulus.get_str() << ": variables {";
      for (std::size_t k = 0; k < s.members.size(); ++k)
        std::cout << (k ? "," : "") << "x" << s.members[k];
      std::cout << "}, degrees with a monomial there: " << s.degrees_cutting
                << ", dim(X meet stratum) = " << s.dim_in_ci
                << (s.dim_in_ci < 0 ? " (empty)" : "")
                << (s.pass ? "  ok" : "  VIOLATION") << "\n";
    }
  }
  std::cout << "generic member well formed: "
            << (wwf && rep.well_formed ? "yes" : "no");
  if (rep.low_dim_caveat)
    std::cout << "  (caveat: dim X < 2, the codimension-2 condition is vacuous)";
  std::cout << "\n";
  std::cout << "Fano index = " << index.get_str() << "  ("
            << (index > 0 ? "Fano" : (index == 0 ? "Calabi-Yau, not Fano"
                                                 : "general type, not Fano"))
            << ")\n";
  return 0;
}

int cmd_betti(const fs::path& file, const Options& opt) {
  json j = load_json_file(file);
  if (j.is_object() && j.contains("rays")) {
    Fan fan = load_valid_fan(file);
    BettiPrediction b = ambient_betti(fan);
    if (opt.json) {
      json out = envelope(file);
      out["betti"] = to_json(b);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "Betti numbers (rational ranks) of the ambient:\n";
      for (std::size_t i = 0; i < b.ambient.size(); ++i)
        std::cout << "  b_" << i << " = " << b.ambient[i].get_str() << "\n";
      std::cout << b.notes << "\n";
    }
    return 0;
  }
  SpecDocument doc = parse_spec_document(j);
  CiSpec spec = build_ci_spec(doc, file.parent_path());
  BettiPrediction b = lefschetz_predict(spec);
  if (opt.json) {
    json out = envelope(file);
    out["betti"] = to_json(b);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "ambient Betti numbers (rational ranks):";
    for (const Int& x : b.ambient) std::cout << " " << x.get_str();
    std::cout << "\npredicted for X (dim " << b.ci_dim << "):\n";
    for (std::size_t i = 0; i < b.ci_low.size(); ++i)
      std::cout << "  b_" << i << "(X) = " << b.ci_low[i].get_str() << "\n";
    std::cout << "  b_" << b.ci_dim
              << "(X) >= " << b.middle_lower_bound.get_str() << "\n";
    std::cout << b.notes << "\n";
  }
  return 0;
}

int cmd_verdict(const fs::path& file, const Options& opt) {
  SpecDocument doc = parse_spec_document(load_json_file(file));
  CiSpec spec = build_ci_spec(doc, file.parent_path());
  TheoremVerdict v = theorem_verdict(spec);
  if (opt.json) {
    json j = envelope(file);
    j["verdict"] = verdict_to_json(v);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  auto line = [](const char* name, Flag f) {
    std::cout << "  " << name;
    for (std::size_t i = std::string(name).size(); i < 14; ++i) std::cout << ' ';
    std::cout << flag_str(f) << "\n";
  };
  std::cout << "hypothesis checks:\n";
  line("q_factorial", v.q_factorial);
  line("complete", v.complete);
  line("ample_all", v.ample_all);
  line("fano", v.fano);
  line("dim_ge_2", v.dim_ge_2);
  line("well_formed", v.well_formed);
  line("pic_rank_one", v.pic_rank_one);
  if (v.ambient) std::cout << "ambient: " << v.ambient->describe() << "\n";
  if (v.fano_index_value)
    std::cout << "Fano index: " << v.fano_index_value->get_str() << "\n";
  if (!v.failed.empty()) {
    std::cout << "failed:";
    for (const auto& f : v.failed) std::cout << " " << f;
    std::cout << "\n";
  }
  std::cout << "assumed, not checkable:\n";
  for (const auto& s : v.inconclusive) std::cout << "  - " << s << "\n";
  std::cout << "conclusion [" << conclusion_str(v.conclusion) << "]: " << v.text
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric-wci: exact Cox quotient data, generalized weighted "
               "projective space classification, and complete intersection "
               "hypothesis checking"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_option("--budget", opt.budget,
                 "lattice point enumeration budget (candidates)")
      ->envname("TORIC_WCI_BUDGET");

  std::string file;
  auto* cl = app.add_subcommand("cl", "class group, grading, group D, irrelevant locus");
  cl->add_option("file", file, "fan file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "generalized WPS classification");
  classify_cmd->add_option("file", file, "fan file")->required();
  auto* wf = app.add_subcommand("wf", "well-formedness and Fano report");
  wf->add_option("file", file, "spec file")->required();
  auto* betti = app.add_subcommand("betti", "Betti numbers / Lefschetz prediction");
  betti->add_option("file", file, "fan or spec file")->required();
  auto* verdict = app.add_subcommand("verdict", "main-theorem hypothesis verdict");
  verdict->add_option("file", file, "spec file")->required();

  std::string filter;
  std::string corpus_dir;
  auto* verify = app.add_subcommand("verify-paper",
                                    "run the bundled corpus against the goldens");
  verify->add_option("--filter", filter, "run only anchors containing this substring");
  verify->add_option("--corpus", corpus_dir, "corpus directory")
      ->envname("TORIC_WCI_CORPUS");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cl->parsed()) return cmd_cl(file, opt);
    if (classify_cmd->parsed()) return cmd_classify(file, opt);
    if (wf->parsed()) return cmd_wf(file, opt);
    if (betti->parsed()) return cmd_betti(file, opt);
    if (verdict->parsed()) return cmd_verdict(file, opt);
    if (verify->parsed()) {
      VerifyOptions vo;
      vo.corpus_dir = corpus_dir.empty() ? fs::path(TORIC_DEFAULT_CORPUS_DIR)
                                         : fs::path(corpus_dir);
      vo.filter = filter;
      vo.json_output = opt.json;
      vo.budget = opt.budget;
      return verify_paper(vo, std::cout);
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
