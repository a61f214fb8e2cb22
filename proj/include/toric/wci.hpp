#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/coxcl.hpp"
#include "toric/fan.hpp"
#include "toric/gwps.hpp"

namespace toric {

/// One hypersurface degree on a fan ambient: its class and an
/// invariant-divisor witness sum c_i D_i representing it.
struct FanDegree {
  DivisorClass cls;
  std::vector<Int> witness;
};

/// Complete intersection data: weighted projective ambient with integer
/// degrees, or a general fan ambient with witnessed degree classes.
struct CiSpec {
  std::optional<WeightSystem> weights;
  std::vector<Int> degrees;

  std::optional<Fan> ambient_fan;
  std::vector<FanDegree> fan_degrees;

  bool weight_form() const { return weights.has_value(); }
  std::size_t ambient_dim() const;
  std::size_t codimension() const;
  std::size_t ci_dim() const { return ambient_dim() - codimension(); }
};

/// Builds and checks a weight-form spec: positive degrees, k < N, and
/// every degree realized by at least one monomial (exact knapsack).
CiSpec make_weight_spec(WeightSystem w, std::vector<Int> degrees);

/// Builds and checks a fan-form spec: the fan must validate, witnesses
/// have length b, and every degree admits a nonnegative representative.
CiSpec make_fan_spec(Fan fan, std::vector<std::vector<Int>> witnesses);

/// Is some monomial on the given weights of this degree?  Exact
/// dynamic programming over achievable degrees.
bool monomial_exists(std::span<const Int> weights, const Int& degree);

struct BettiPrediction {
  std::vector<Int> ambient;  // b_0 .. b_{2N}, odd entries zero
  std::vector<Int> ci_low;   // b_i(X) for i < ci_dim
  std::size_t ci_dim = 0;
  Int middle_lower_bound;    // b_{ci_dim}(X) >= this (injectivity)
  std::string notes;
};

/// Even Betti numbers of the complete simplicial toric variety from
/// the h-vector of its fan's f-vector; rational-cohomology ranks.
BettiPrediction ambient_betti(const Fan& fan);

/// Transfers the ambient Betti numbers below the middle degree;
/// requires every degree ample.
BettiPrediction lefschetz_predict(const CiSpec& spec);

struct PicTransfer {
  std::size_t ci_dim = 0;
  bool isomorphism = false;    // dim X >= 3
  std::size_t pic_rank = 0;    // meaningful when isomorphism
  std::size_t lower_bound = 0; // dim X == 2: rk Pic(X) >= this
  std::string note;
};

/// Picard rank consequences for ample complete intersections; dim X
/// must be at least 2.
PicTransfer pic_rank_transfer(const CiSpec& spec);

struct Stratum {
  Int modulus;
  std::vector<std::size_t> members;  // weight indices divisible by modulus
  std::size_t degrees_cutting = 0;   // degrees with a monomial on the stratum
  long long dim_in_ci = 0;           // dim of X meet stratum; < 0 means empty
  bool pass = false;
};

struct WellFormedReport {
  bool well_formed = true;
  std::vector<Stratum> strata;
  bool low_dim_caveat = false;  // dim X < 2: the codimension-2 condition is vacuous
};

/// Stratum-by-stratum well-formedness of the generic complete
/// intersection of the given degrees in P(w).
WellFormedReport wci_well_formed(const WeightSystem& w, std::span<const Int> degrees);

/// Sum of weights minus sum of degrees; positive iff the generic
/// well formed quasi-smooth member is Fano.
Int fano_index(const WeightSystem& w, std::span<const Int> degrees);

enum class Flag { yes, no, unknown };
const char* flag_str(Flag f);

struct TheoremVerdict {
  Flag q_factorial = Flag::unknown;
  Flag complete = Flag::unknown;
  Flag ample_all = Flag::unknown;
  Flag fano = Flag::unknown;
  Flag dim_ge_2 = Flag::unknown;
  Flag well_formed = Flag::unknown;
  Flag pic_rank_one = Flag::unknown;

  std::vector<std::string> failed;        // flags that are definitely violated
  std::vector<std::string> inconclusive;  // unverifiable or undecided items

  std::optional<GwpsClassification> ambient;
  std::optional<WellFormedReport> strata;
  std::optional<Int> fano_index_value;

  enum class Conclusion {
    y_must_be_wps,       // hypotheses consistent; ambient is a WPS
    hypotheses_not_met,  // some checkable hypothesis fails
    no_smooth_ci,        // quotient ambient: any such CI is singular
    inconclusive         // undecided items block the conclusion
  };
  Conclusion conclusion = Conclusion::inconclusive;
  std::string text;
};

const char* conclusion_str(TheoremVerdict::Conclusion c);

/// Evaluates every checkable hypothesis of the classification theorem
/// and reports the structured outcome.
TheoremVerdict theorem_verdict(const CiSpec& spec);

}  // namespace toric
