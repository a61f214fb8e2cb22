#include "toric/wci.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

namespace {

constexpr unsigned long kKnapsackCap = 8'000'000;

Int binomial(std::size_t n, std::size_t k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::vector<Int> all_one_witness(std::size_t b) {
  return std::vector<Int>(b, Int(1));
}

}  // namespace

std::size_t CiSpec::ambient_dim() const {
  return weight_form() ? weights->dim() : ambient_fan->lattice_rank;
}

std::size_t CiSpec::codimension() const {
  return weight_form() ? degrees.size() : fan_degrees.size();
}

bool monomial_exists(std::span<const Int> weights, const Int& degree) {
  if (degree < 0) return false;
  if (degree == 0) return true;
  if (weights.empty()) return false;
  if (degree > Int(kKnapsackCap))
    throw BudgetError("monomial_exists: degree " + degree.get_str() +
                      " exceeds the exact knapsack cap");
  const unsigned long d = degree.get_ui();
  std::vector<char> reach(d + 1, 0);
  reach[0] = 1;
  for (const Int& w : weights) {
    if (w <= 0 || w > Int(d)) continue;
    const unsigned long a = w.get_ui();
    for (unsigned long x = a; x <= d; ++x)
      if (reach[x - a]) reach[x] = 1;
  }
  return reach[d] != 0;
}

CiSpec make_weight_spec(WeightSystem w, std::vector<Int> degrees) {
  if (degrees.empty()) throw InputError("spec needs at least one degree");
  if (degrees.size() >= w.dim())
    throw InputError("codimension " + std::to_string(degrees.size()) +
                     " is not below the ambient dimension " +
                     std::to_string(w.dim()));
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    if (degrees[j] <= 0)
      throw InputError("degree #" + std::to_string(j + 1) + " must be positive");
    if (!monomial_exists(w.weights, degrees[j]))
      throw InputError("degree #" + std::to_string(j + 1) + " (" +
                       degrees[j].get_str() + ") is not realized by any monomial in " +
                       w.wps_name());
  }
  CiSpec spec;
  spec.weights = std::move(w);
  spec.degrees = std::move(degrees);
  return spec;
}

CiSpec make_fan_spec(Fan fan, std::vector<std::vector<Int>> witnesses) {
  ValidationReport rep = validate(fan);
  if (!rep.ok()) throw InputError("ambient fan is invalid: " + rep.summary());
  if (witnesses.empty()) throw InputError("spec needs at least one degree");
  if (witnesses.size() >= fan.lattice_rank)
    throw InputError("codimension " + std::to_string(witnesses.size()) +
                     " is not below the ambient dimension " +
                     std::to_string(fan.lattice_rank));

  ClassGroupData cl = class_group(fan);
  CiSpec spec;
  spec.fan_degrees.reserve(witnesses.size());
  for (std::size_t j = 0; j < witnesses.size(); ++j) {
    auto& c = witnesses[j];
    if (c.size() != fan.ray_count())
      throw InputError("witness #" + std::to_string(j + 1) + " has length " +
                       std::to_string(c.size()) + ", expected " +
                       std::to_string(fan.ray_count()));
    // realizability: some linearly equivalent effective divisor
    bool effective = std::all_of(c.begin(), c.end(), [](const Int& x) { return x >= 0; });
    if (!effective) {
      // c - rays*m over a small lattice search
      const long box = 6;
      std::vector<long> m(fan.lattice_rank, -box);
      bool found = false;
      for (;;) {
        std::vector<Int> mm(m.begin(), m.end());
        std::vector<Int> shift = mat_vec(fan.rays, mm);
        bool ok = true;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i] - shift[i] < 0) {
            ok = false;
            break;
          }
        if (ok) {
          found = true;
          break;
        }
        std::size_t t = 0;
        while (t < m.size() && ++m[t] > box) m[t++] = -box;
        if (t == m.size()) break;
      }
      if (!found)
        throw InputError("degree #" + std::to_string(j + 1) +
                         " is not certified realizable (no nonnegative "
                         "representative found)");
    }
    spec.fan_degrees.push_back(FanDegree{cl.divisor_class(c), std::move(c)});
  }
  spec.ambient_fan = std::move(fan);
  return spec;
}

BettiPrediction ambient_betti(const Fan& fan) {
  const std::size_t n = fan.lattice_rank;
  // f-vector: f[i] = number of i-dimensional cones (f[0] = 1, trivial cone)
  std::vector<Int> f(n + 1, Int(0));
  f[0] = 1;
  for (const auto& face : distinct_faces(fan)) f[face.size()] += 1;

  BettiPrediction out;
  out.ambient.assign(2 * n + 1, Int(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Int h = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      Int term = binomial(n - i, k - i) * f[i];
      if ((k - i) % 2 == 0)
        h += term;
      else
        h -= term;
    }
    out.ambient[2 * k] = h;
  }
  out.ci_dim = n;
  out.middle_lower_bound = out.ambient[n];
  out.notes = "rational-cohomology ranks; integral torsion is not compared";
  return out;
}

namespace {

// resolved view of a spec over a fan ambient
struct Resolved {
  Fan fan;
  ClassGroupData cl;
  std::vector<FanDegree> degs;
};

Resolved resolve(const CiSpec& spec) {
  Resolved r;
  if (spec.weight_form()) {
    r.fan = fan_from_weights(*spec.weights);
    r.cl = class_group(r.fan);
    for (const Int& d : spec.degrees) {
      DivisorClass c;
      c.free_part = {d};
      auto w = lift_rank_one(r.cl, c);
      if (!w) throw Error("resolve: rank-one lift failed");
      r.degs.push_back(FanDegree{c, *w});
    }
  } else {
    r.fan = *spec.ambient_fan;
    r.cl = class_group(r.fan);
    r.degs = spec.fan_degrees;
  }
  return r;
}

void require_ample(const Resolved& r, const CiSpec& spec) {
  if (spec.weight_form()) {
    // rank-one torsion-free: ample iff positive, enforced at construction
    return;
  }
  for (std::size_t j = 0; j < r.degs.size(); ++j)
    if (!is_ample(r.fan, r.cl, r.degs[j].cls, r.degs[j].witness))
      throw InputError("degree #" + std::to_string(j + 1) + " with class " +
                       r.cl.describe_class(r.degs[j].cls) + " is not ample");
}

}  // namespace

BettiPrediction lefschetz_predict(const CiSpec& spec) {
  Resolved r = resolve(spec);
  require_ample(r, spec);

  const std::size_t dim_x = spec.ci_dim();
  BettiPrediction out = ambient_betti(r.fan);
  out.ci_dim = dim_x;
  out.ci_low.assign(out.ambient.begin(), out.ambient.begin() + dim_x);
  out.middle_lower_bound = out.ambient[dim_x];
  std::ostringstream note;
  note << "b_i(X) = b_i(Y) for i < " << dim_x << "; b_" << dim_x
       << "(X) >= " << out.middle_lower_bound.get_str()
       << " (injection at the middle degree); ranks above the middle follow "
          "from duality only for smooth X; rational-cohomology ranks, torsion "
          "not compared";
  out.notes = note.str();
  return out;
}

PicTransfer pic_rank_transfer(const CiSpec& spec) {
  const std::size_t dim_x = spec.ci_dim();
  if (dim_x <= 1)
    throw InputError("pic_rank_transfer: unsupported for dim(X) <= 1");
  Resolved r = resolve(spec);
  require_ample(r, spec);

  PicTransfer out;
  out.ci_dim = dim_x;
  const std::size_t rk = r.cl.free_rank();
  if (dim_x >= 3) {
    out.isomorphism = true;
    out.pic_rank = rk;
    out.note = "Pic(Y) -> Pic(X) is an isomorphism; rk Pic(X) = " +
               std::to_string(rk);
  } else {
    out.isomorphism = false;
    out.lower_bound = rk;
    out.note = "Pic(Y) -> Pic(X) is injective; rk Pic(X) >= " +
               std::to_string(rk) +
               ", and rk Cl(X) >= rk Cl(Y) if X is Q-factorial";
  }
  return out;
}

WellFormedReport wci_well_formed(const WeightSystem& w,
                                 std::span<const Int> degrees) {
  const long long dim_x =
      static_cast<long long>(w.dim()) - static_cast<long long>(degrees.size());
  WellFormedReport rep;
  rep.low_dim_caveat = dim_x < 2;

  Int max_w = 0;
  for (const Int& a : w.weights) max_w = std::max(max_w, a);
  for (Int m = 2; m <= max_w; ++m) {
    Stratum st;
    st.modulus = m;
    std::vector<Int> stratum_weights;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w.weights[i] % m == 0) {
        st.members.push_back(i);
        stratum_weights.push_back(w.weights[i]);
      }
    if (st.members.empty()) continue;
    for (const Int& d : degrees)
      if (monomial_exists(stratum_weights, d)) ++st.degrees_cutting;
    st.dim_in_ci = static_cast<long long>(st.members.size()) - 1 -
                   static_cast<long long>(st.degrees_cutting);
    st.pass = st.dim_in_ci < 0 || st.dim_in_ci <= dim_x - 2;
    rep.well_formed = rep.well_formed && st.pass;
    rep.strata.push_back(std::move(st));
  }
  return rep;
}

Int fano_index(const WeightSystem& w, std::span<const Int> degrees) {
  Int idx = 0;
  for (const Int& a : w.weights) idx += a;
  for (const Int& d : degrees) idx -= d;
  return idx;
}

const char* flag_str(Flag f) {
  switch (f) {
    case Flag::yes: return "yes";
    case Flag::no: return "no";
    default: return "unknown";
  }
}

const char* conclusion_str(TheoremVerdict::Conclusion c) {
  switch (c) {
    case TheoremVerdict::Conclusion::y_must_be_wps: return "y_must_be_wps";
    case TheoremVerdict::Conclusion::hypotheses_not_met: return "hypotheses_not_met";
    case TheoremVerdict::Conclusion::no_smooth_ci: return "no_smooth_ci";
    default: return "inconclusive";
  }
}

TheoremVerdict theorem_verdict(const CiSpec& spec) {
  TheoremVerdict v;
  const std::size_t dim_x = spec.ci_dim();
  v.dim_ge_2 = dim_x >= 2 ? Flag::yes : Flag::no;

  std::size_t cl_free_rank = 0;

  if (spec.weight_form()) {
    const WeightSystem& w = *spec.weights;
    v.q_factorial = Flag::yes;
    v.complete = Flag::yes;
    v.ample_all = Flag::yes;  // positive degrees on a rank-one ambient
    v.fano_index_value = fano_index(w, spec.degrees);
    v.fano = *v.fano_index_value > 0 ? Flag::yes : Flag::no;
    WellFormedReport wf = wci_well_formed(w, spec.degrees);
    v.well_formed =
        (weights_well_formed(w) && wf.well_formed) ? Flag::yes : Flag::no;
    v.strata = std::move(wf);
    v.ambient = GwpsClassification{GwpsKind::weighted_projective_space, w, {}};
    cl_free_rank = 1;
  } else {
    const Fan& fan = *spec.ambient_fan;
    // make_fan_spec validated the fan (simplicial, complete, faces)
    v.q_factorial = Flag::yes;
    v.complete = Flag::yes;
    ClassGroupData cl = class_group(fan);
    cl_free_rank = cl.free_rank();

    bool all_ample = true;
    for (const auto& d : spec.fan_degrees)
      if (!is_ample(fan, cl, d.cls, d.witness)) {
        all_ample = false;
        break;
      }
    v.ample_all = all_ample ? Flag::yes : Flag::no;

    // anticanonical minus the degrees, with the canonical witness
    std::vector<Int> fano_witness = all_one_witness(fan.ray_count());
    for (const auto& d : spec.fan_degrees)
      for (std::size_t i = 0; i < fano_witness.size(); ++i)
        fano_witness[i] -= d.witness[i];
    DivisorClass fano_class = cl.divisor_class(fano_witness);
    v.fano = is_ample(fan, cl, fano_class, fano_witness) ? Flag::yes : Flag::no;

    SingularityReport sing = singularity_report(fan);
    if (sing.smooth()) {
      v.well_formed = Flag::yes;
    } else if (*sing.singular_codim > dim_x) {
      // the generic member misses the singular locus entirely
      v.well_formed = Flag::yes;
    } else {
      v.well_formed = Flag::unknown;
      v.inconclusive.push_back(
          "well_formed: generic member meets Sing Y in codimension " +
          std::to_string(*sing.singular_codim) + " (>= 2), not certified");
    }

    if (is_gwps(fan)) v.ambient = classify(fan);
  }

  if (dim_x >= 3) {
    v.pic_rank_one = cl_free_rank == 1 ? Flag::yes : Flag::no;
  } else if (dim_x == 2) {
    if (cl_free_rank == 1) {
      v.pic_rank_one = Flag::unknown;
      v.inconclusive.push_back(
          "pic_rank_one: restriction is only injective for dim(X) = 2");
    } else {
      v.pic_rank_one = Flag::no;  // rk Pic(X) >= rk Cl(Y) >= 2
    }
  } else {
    v.pic_rank_one = Flag::unknown;
    v.inconclusive.push_back(
        "pic_rank_one: no Lefschetz control for dim(X) <= 1");
  }

  auto record = [&](Flag f, const char* name) {
    if (f == Flag::no) v.failed.push_back(name);
  };
  record(v.q_factorial, "q_factorial");
  record(v.complete, "complete");
  record(v.ample_all, "ample_all");
  record(v.fano, "fano");
  record(v.dim_ge_2, "dim_ge_2");
  record(v.well_formed, "well_formed");
  record(v.pic_rank_one, "pic_rank_one");

  v.inconclusive.push_back("smoothness of X (not verifiable from degree data)");
  v.inconclusive.push_back(
      "regular sequence / complete-intersection property (not verifiable)");
  if (!spec.weight_form())
    v.inconclusive.push_back("projectivity of Y (completeness checked only)");

  const bool quotient_ambient =
      v.ambient && v.ambient->kind == GwpsKind::quotient;
  if (quotient_ambient && v.ample_all == Flag::yes && v.fano == Flag::yes &&
      v.well_formed != Flag::no) {
    v.conclusion = TheoremVerdict::Conclusion::no_smooth_ci;
    v.text = "ambient " + v.ambient->describe() +
             " is a nontrivial finite quotient of a weighted projective "
             "space: every well formed Fano complete intersection here is "
             "singular, so no smooth one exists";
  } else if (!v.failed.empty()) {
    v.conclusion = TheoremVerdict::Conclusion::hypotheses_not_met;
    std::ostringstream os;
    os << "hypotheses not met:";
    for (const auto& f : v.failed) os << " " << f;
    v.text = os.str();
  } else if (v.well_formed == Flag::unknown || v.pic_rank_one == Flag::unknown) {
    v.conclusion = TheoremVerdict::Conclusion::inconclusive;
    v.text =
        "no checkable hypothesis fails, but some could not be decided; see "
        "the inconclusive list";
  } else {
    v.conclusion = TheoremVerdict::Conclusion::y_must_be_wps;
    v.text = "all checkable hypotheses hold; granting the unverifiable "
             "assumptions (smoothness, regular sequence), the ambient must be "
             "a weighted projective space" +
             std::string(v.ambient ? " - consistent: it is " +
                                         v.ambient->describe()
                                   : "");
  }
  return v;
}

}  // namespace toric
