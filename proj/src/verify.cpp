#include "toric/verify.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "toric/io.hpp"
#include "toric/verify.hpp"

namespace toric {

namespace {

struct Ctx {
  std::filesystem::path dir;
  json goldens;
  EnumerationBudget budget;
  std::map<std::string, Fan> fans;

  const Fan& fan(const std::string& file) {
    auto it = fans.find(file);
    if (it != fans.end()) return it->second;
    Fan f = build_fan(parse_fan_document(load_json_file(dir / file)));
    return fans.emplace(file, std::move(f)).first->second;
  }

  CiSpec spec(const std::string& file) {
    return build_ci_spec(parse_spec_document(load_json_file(dir / file)), dir);
  }

  const json& golden(const std::string& key) const {
    auto it = goldens.find(key);
    if (it == goldens.end())
      throw InputError("goldens.json is missing anchor \"" + key + "\"");
    return *it;
  }
};

struct CheckResult {
  bool pass = false;
  std::string detail;
};

CheckResult ok(std::string detail) { return {true, std::move(detail)}; }
CheckResult mismatch(const std::string& expected, const std::string& actual) {
  return {false, "expected " + expected + ", got " + actual};
}

std::string dump(const json& j) { return j.dump(); }

bool same_int_vector(const json& expected, const std::vector<Int>& actual) {
  if (!expected.is_array() || expected.size() != actual.size()) return false;
  for (std::size_t i = 0; i < actual.size(); ++i)
    if (int_from_json(expected[i]) != actual[i]) return false;
  return true;
}

json int_vector_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

CheckResult check_class_group(Ctx& ctx, const std::string& key,
                              const std::string& file) {
  const json& g = ctx.golden(key);
  ClassGroupData cl = class_group(ctx.fan(file));
  const std::size_t want_rank = g.at("free_rank").get<std::size_t>();
  const bool torsion_ok = same_int_vector(g.at("torsion"), cl.torsion());
  if (cl.free_rank() != want_rank || !torsion_ok)
    return mismatch(dump(g), "free_rank " + std::to_string(cl.free_rank()) +
                                 ", torsion " + dump(int_vector_json(cl.torsion())));
  return ok("Cl = " + cl.describe_group());
}

CheckResult check_grading(Ctx& ctx, const std::string& key,
                          const std::string& file) {
  const json& g = ctx.golden(key);
  ClassGroupData cl = class_group(ctx.fan(file));
  if (cl.free_rank() != 1) return mismatch("free rank 1 grading", cl.describe_group());
  std::vector<Int> grading;
  for (std::size_t i = 0; i < cl.ray_count(); ++i)
    grading.push_back(cl.ray_class(i).free_part[0]);
  if (!same_int_vector(g, grading))
    return mismatch(dump(g), dump(int_vector_json(grading)));
  return ok("grading " + dump(int_vector_json(grading)));
}

CheckResult check_group_d(Ctx& ctx, const std::string& key,
                          const std::string& file) {
  const json& g = ctx.golden(key);
  GroupD d = group_D(class_group(ctx.fan(file)));
  bool pass = d.torus_rank == g.at("torus_rank").get<std::size_t>() &&
              same_int_vector(g.at("finite_part"), d.finite_part);
  if (g.contains("connected"))
    pass = pass && d.connected() == g.at("connected").get<bool>();
  if (!pass)
    return mismatch(dump(g), "torus_rank " + std::to_string(d.torus_rank) +
                                 ", finite " + dump(int_vector_json(d.finite_part)));
  return ok("D = " + d.describe());
}

CheckResult check_irrelevant_origin(Ctx& ctx, const std::string& key,
                                    const std::string& file) {
  const json& g = ctx.golden(key);
  const Fan& fan = ctx.fan(file);
  IrrelevantLocus z = irrelevant_locus(fan);
  bool origin = z.is_origin(fan.ray_count());
  if (origin != g.get<bool>())
    return mismatch(dump(g), origin ? "origin" : "not the origin");
  return ok(origin ? "Z = {0}" : "Z is larger than the origin");
}

CheckResult check_classification(Ctx& ctx, const std::string& key,
                                 const std::string& file) {
  const json& g = ctx.golden(key);
  GwpsClassification c = classify(ctx.fan(file));
  const std::string kind =
      c.kind == GwpsKind::weighted_projective_space ? "wps" : "quotient";
  bool pass = kind == g.at("kind").get<std::string>() &&
              same_int_vector(g.at("weights"), c.weights.weights) &&
              same_int_vector(g.at("quotient_group"), c.quotient_group);
  if (!pass)
    return mismatch(dump(g), kind + " weights " +
                                 dump(int_vector_json(c.weights.weights)) +
                                 " group " + dump(int_vector_json(c.quotient_group)));
  return ok(c.describe());
}

CheckResult check_roundtrip(Ctx& ctx, const std::string& key) {
  const json& g = ctx.golden(key);
  for (const auto& entry : g) {
    std::vector<Int> w;
    for (const auto& e : entry.at("weights")) w.push_back(int_from_json(e));
    WeightSystem ws{w};
    Fan fan = fan_from_weights(ws);
    WeightSystem back = weights_of(fan);
    if (!(back == ws))
      return mismatch(dump(entry), "weights came back as " +
                                       dump(int_vector_json(back.weights)));
    ClassGroupData cl = class_group(fan);
    if (cl.free_rank() != 1 || !cl.torsion().empty())
      return mismatch("Cl = Z for " + ws.wps_name(), cl.describe_group());
    std::vector<Int> grading;
    for (std::size_t i = 0; i < cl.ray_count(); ++i)
      grading.push_back(cl.ray_class(i).free_part[0]);
    if (!same_int_vector(entry.at("grading"), grading))
      return mismatch(dump(entry.at("grading")), dump(int_vector_json(grading)));
  }
  return ok(std::to_string(g.size()) + " weight systems round-trip");
}

CheckResult check_example2_terminal(Ctx& ctx, const std::string& key) {
  const json& g = ctx.golden(key);
  const Fan& fan = ctx.fan("example2.fan");
  bool all = true;
  for (const auto& cone : fan.max_cones)
    if (!cone_is_terminal(fan, cone, ctx.budget)) {
      all = false;
      break;
    }
  if (all != g.get<bool>())
    return mismatch(dump(g), all ? "all cones terminal" : "a non-terminal cone");
  return ok("all maximal cones terminal");
}

CheckResult check_betti(Ctx& ctx, const std::string& key, const std::string& file) {
  const json& g = ctx.golden(key);
  BettiPrediction b = ambient_betti(ctx.fan(file));
  if (!same_int_vector(g, b.ambient))
    return mismatch(dump(g), dump(int_vector_json(b.ambient)));
  return ok("Betti " + dump(int_vector_json(b.ambient)));
}

CheckResult check_example3_weights(Ctx& ctx, const std::string& key) {
  const json& g = ctx.golden(key);
  WeightSystem w = weights_of(ctx.fan("example3.fan"));
  if (!same_int_vector(g, w.weights))
    return mismatch(dump(g), dump(int_vector_json(w.weights)));
  return ok("rays sum to zero with weights " + dump(int_vector_json(w.weights)));
}

CheckResult check_example3_smooth_triples(Ctx& ctx, const std::string& key) {
  const json& g = ctx.golden(key);
  const Fan& fan = ctx.fan("example3.fan");
  bool all = true;
  for (std::size_t i = 0; i < 5 && all; ++i)
    for (std::size_t j = i + 1; j < 5 && all; ++j)
      for (std::size_t k = j + 1; k < 5 && all; ++k) {
        ConeIndexSet triple{i, j, k};
        if (!cone_is_smooth(fan, triple)) all = false;
      }
  if (all != g.get<bool>())
    return mismatch(dump(g), all ? "all triples smooth" : "a singular triple");
  return ok(all ? "all 10 ray triples span smooth cones"
                : "singular ray triples exist, as expected for an index-3 quotient");
}

CheckResult check_example3_isolated(Ctx& ctx, const std::string& key) {
  const json& g = ctx.golden(key);
  SingularityReport rep = singularity_report(ctx.fan("example3.fan"));
  if (rep.smooth()) return mismatch("a singular variety", "smooth");
  if (rep.isolated != g.get<bool>())
    return mismatch(dump(g), rep.isolated ? "isolated" : "not isolated");
  return ok(rep.isolated ? "singularities are isolated"
                         : "singular locus contains curves, as expected for Z/3");
}

CheckResult check_dichotomy(Ctx& ctx, const std::string& key) {
  const json& g = ctx.golden(key);
  std::map<std::string, std::string> files = {
      {"p2", "p2.fan"},
      {"p3", "p3.fan"},
      {"p4", "p4.fan"},
      {"example2", "example2.fan"},
      {"example3", "example3.fan"},
      {"example4_p3", "example4_p3.fan"},
      {"example4_p5", "example4_p5.fan"},
      {"example4_p7", "example4_p7.fan"}};
  std::vector<std::string> wps, quotient;
  for (const auto& [name, file] : files) {
    GwpsClassification c = classify(ctx.fan(file));
    (c.kind == GwpsKind::weighted_projective_space ? wps : quotient).push_back(name);
  }
  auto as_set = [](const json& arr) {
    std::vector<std::string> v;
    for (const auto& e : arr) v.push_back(e.get<std::string>());
    std::sort(v.begin(), v.end());
    return v;
  };
  if (as_set(g.at("wps")) != wps || as_set(g.at("quotient")) != quotient) {
    json actual;
    actual["wps"] = wps;
    actual["quotient"] = quotient;
    return mismatch(dump(g), dump(actual));
  }
  return ok("every corpus gwps is a WPS or a finite quotient of one");
}

CheckResult check_counterexample_failed(Ctx& ctx, const std::string& key,
                                        const std::string& file) {
  const json& g = ctx.golden(key);
  TheoremVerdict v = theorem_verdict(ctx.spec(file));
  std::vector<std::string> want;
  for (const auto& e : g.at("failed")) want.push_back(e.get<std::string>());
  if (v.failed != want) {
    json actual = v.failed;
    return mismatch(dump(g.at("failed")), dump(actual));
  }
  if (g.contains("fano_index")) {
    if (!v.fano_index_value ||
        *v.fano_index_value != int_from_json(g.at("fano_index")))
      return mismatch(dump(g.at("fano_index")),
                      v.fano_index_value ? v.fano_index_value->get_str() : "none");
  }
  std::string names;
  for (const auto& f : want) names += (names.empty() ? "" : ", ") + f;
  return ok("verdict names exactly: " + names);
}

CheckResult check_counterexample_smoothness(Ctx& ctx, const std::string& key,
                                            const std::string& file) {
  const json& g = ctx.golden(key);
  TheoremVerdict v = theorem_verdict(ctx.spec(file));
  if (std::string(conclusion_str(v.conclusion)) != g.at("conclusion").get<std::string>())
    return mismatch(dump(g.at("conclusion")), conclusion_str(v.conclusion));
  const std::string needle = g.at("inconclusive_mentions").get<std::string>();
  bool mentioned = false;
  for (const auto& item : v.inconclusive)
    if (item.find(needle) != std::string::npos) mentioned = true;
  if (!mentioned)
    return mismatch("\"" + needle + "\" among the inconclusive items",
                    dump(json(v.inconclusive)));
  if (!v.failed.empty())
    return mismatch("no failed hypotheses", dump(json(v.failed)));
  return ok("Proposition branch: only smoothness is unattainable");
}

struct Anchor {
  std::string name;
  std::function<CheckResult(Ctx&)> run;
};

std::vector<Anchor> anchor_list() {
  std::vector<Anchor> anchors;
  auto add = [&](std::string name, std::function<CheckResult(Ctx&)> fn) {
    anchors.push_back({std::move(name), std::move(fn)});
  };

  add("example1.p2.class_group",
      [](Ctx& c) { return check_class_group(c, "example1.p2.class_group", "p2.fan"); });
  add("example1.p2.grading",
      [](Ctx& c) { return check_grading(c, "example1.p2.grading", "p2.fan"); });
  add("example1.p2.group_d",
      [](Ctx& c) { return check_group_d(c, "example1.p2.group_d", "p2.fan"); });
  add("example1.p2.irrelevant_locus", [](Ctx& c) {
    return check_irrelevant_origin(c, "example1.p2.irrelevant_locus", "p2.fan");
  });
  add("example1.roundtrip",
      [](Ctx& c) { return check_roundtrip(c, "example1.roundtrip"); });

  add("example2.class_group", [](Ctx& c) {
    return check_class_group(c, "example2.class_group", "example2.fan");
  });
  add("example2.group_d",
      [](Ctx& c) { return check_group_d(c, "example2.group_d", "example2.fan"); });
  add("example2.classification", [](Ctx& c) {
    return check_classification(c, "example2.classification", "example2.fan");
  });
  add("example2.irrelevant_locus", [](Ctx& c) {
    return check_irrelevant_origin(c, "example2.irrelevant_locus", "example2.fan");
  });
  add("example2.terminal",
      [](Ctx& c) { return check_example2_terminal(c, "example2.terminal"); });
  add("example2.betti",
      [](Ctx& c) { return check_betti(c, "example2.betti", "example2.fan"); });

  add("example3.weights",
      [](Ctx& c) { return check_example3_weights(c, "example3.weights"); });
  add("example3.class_group", [](Ctx& c) {
    return check_class_group(c, "example3.class_group", "example3.fan");
  });
  add("example3.smooth_triples", [](Ctx& c) {
    return check_example3_smooth_triples(c, "example3.smooth_triples");
  });
  add("example3.isolated",
      [](Ctx& c) { return check_example3_isolated(c, "example3.isolated"); });

  for (unsigned p : {3u, 5u, 7u}) {
    const std::string tag = "example4.p" + std::to_string(p);
    const std::string file = "example4_p" + std::to_string(p) + ".fan";
    add(tag + ".class_group", [tag, file](Ctx& c) {
      return check_class_group(c, tag + ".class_group", file);
    });
    add(tag + ".classification", [tag, file](Ctx& c) {
      return check_classification(c, tag + ".classification", file);
    });
  }

  add("lemma.dichotomy", [](Ctx& c) { return check_dichotomy(c, "lemma.dichotomy"); });

  add("counterexample.dim1", [](Ctx& c) {
    return check_counterexample_failed(c, "counterexample.dim1", "ce_dim1.spec");
  });
  add("counterexample.not_fano", [](Ctx& c) {
    return check_counterexample_failed(c, "counterexample.not_fano",
                                       "ce_not_fano.spec");
  });
  add("counterexample.smoothness", [](Ctx& c) {
    return check_counterexample_smoothness(c, "counterexample.smoothness",
                                           "ce_smooth.spec");
  });
  return anchors;
}

}  // namespace

int verify_paper(const VerifyOptions& opts, std::ostream& out) {
  Ctx ctx;
  ctx.dir = opts.corpus_dir;
  ctx.budget = EnumerationBudget{opts.budget};
  ctx.goldens = load_json_file(opts.corpus_dir / "goldens.json");

  std::vector<Anchor> anchors = anchor_list();
  if (!opts.filter.empty()) {
    std::erase_if(anchors, [&](const Anchor& a) {
      return a.name.find(opts.filter) == std::string::npos;
    });
    if (anchors.empty())
      throw InputError("filter \"" + opts.filter + "\" matches no anchor");
  }

  bool all_pass = true;
  json report = json::array();
  for (const auto& anchor : anchors) {
    CheckResult r = anchor.run(ctx);
    all_pass = all_pass && r.pass;
    if (opts.json_output) {
      json e;
      e["name"] = anchor.name;
      e["pass"] = r.pass;
      e["detail"] = r.detail;
      report.push_back(std::move(e));
    } else {
      out << (r.pass ? "PASS  " : "FAIL  ") << anchor.name;
      for (std::size_t i = anchor.name.size(); i < 34; ++i) out << ' ';
      out << r.detail << "\n";
    }
  }

  if (opts.json_output) {
    json j;
    j["all_pass"] = all_pass;
    j["anchors"] = std::move(report);
    out << j.dump(2) << "\n";
  } else {
    out << (all_pass ? "all anchors pass" : "ANCHOR MISMATCH") << " ("
        << anchors.size() << " checked)\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace toric
