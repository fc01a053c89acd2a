#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rmspec/apset.hpp"
#include "rmspec/codes.hpp"

namespace rmspec {

/// Where a proven-attained weight range came from.
enum class WeightSource {
    Boundary,         // 0 and 2^m, always present
    Sumset,           // sum of two weights of RM(r-1, m-1)
    KtAdmissible,     // Kasami-Tokura low-weight layer (attained by witnesses)
    BchIntersection,  // weight of a computed RM/extended-BCH intersection
    Baseline,         // cited table bundled as data
    ClosedForm,       // order 0, 1, m-2, m-1, m closed forms
    Search,           // explicit witness function found by search
    Reflection,       // complement of an attained weight to 2^m
};

std::string to_string(WeightSource s);

struct ProvenancePart {
    WeightSource source;
    APSet weights;
};

/// Lower/upper sandwich for the spectrum of RM(r,m): `lower` holds weights
/// proven attained (with provenance), `upper` the weights not excluded by
/// divisibility, the low-weight classification, and reflection symmetry.
struct SpectrumBound {
    int r = 0;
    int m = 0;
    APSet lower;
    APSet upper;
    std::vector<ProvenancePart> provenance;
};

enum class SpectrumStatus { Proven, Partial };

struct SpectrumResult {
    SpectrumBound bound;
    SpectrumStatus status = SpectrumStatus::Partial;

    const APSet& spectrum() const { return bound.lower; }  // exact when Proven
    APSet gap() const { return set_difference(bound.upper, bound.lower); }
    nlohmann::json to_json() const;
};

/// Cited spectrum shipped as data (beyond exhaustive reach).
struct BaselineTable {
    std::string name;
    int r = 0;
    int m = 0;
    APSet spectrum;
    std::string source;
};

/// Kasami-Tokura parameters for RM(r,m): alpha = min(r, m-r),
/// beta = (m-r+2)/2, mu ranges over 1..floor(max(alpha, beta)).
struct KTParams {
    int r;
    int m;
    int alpha;
    int beta_num;  // beta = beta_num / 2 exactly
    int mu_max;
};
KTParams kt_params(int r, int m);

/// Exponent e of McEliece's congruence: every weight of RM(r,m) is a
/// multiple of 2^e, e = floor((m-1)/r).  Requires r >= 1.
int mceliece_exponent(int r, int m);

/// The admissible (and attained) weights of RM(r,m) in [d, 2d),
/// d = 2^{m-r}: all values 2^{m-r+1} - 2^{m-r+1-mu}, 1 <= mu <= mu_max.
/// Requires 2 <= r <= m-1.
APSet kt_admissible(int r, int m);

enum class WitnessFamily { A, B };

/// The two classified low-weight function families:
///   A: x_1..x_{r-2} (x_{r-1}x_r + x_{r+1}x_{r+2} + ... ), 2 <= 2l <= m-r+2
///   B: x_1..x_{r-l} (x_{r-l+1}..x_r + x_{r+1}..x_{r+l}), 3 <= l <= min(r, m-r)
BooleanFunction kt_witness(int r, int m, WitnessFamily family, int l);

/// S + S: the lower-bound contribution to RM(r+1, m+1) from spectrum S.
APSet sumset_step(const APSet& s);

/// Weights of RM(r,m) not excluded by divisibility, the low-weight
/// classification and reflection symmetry.  Requires 2 <= r <= m-1.
APSet upper_bound(int r, int m);

struct LowerBound {
    APSet set;
    std::vector<ProvenancePart> provenance;
};

/// Attained weights: sumset of the base spectrum (if given), the KT layer,
/// {0, 2^m}, any extra attained weights, closed under reflection.
LowerBound lower_bound(int r, int m, const std::optional<APSet>& base_spectrum,
                       const APSet& extra = {},
                       WeightSource extra_source = WeightSource::BchIntersection);

/// Sandwich prover: Proven iff the lower set equals the upper set.
SpectrumResult sandwich(int r, int m, const std::optional<APSet>& base_spectrum,
                        const APSet& extra = {},
                        WeightSource extra_source = WeightSource::BchIntersection);

/// Spectrum of RM(m-3,m): {0,8} ∪ {12,14,...,2^m-12} ∪ {2^m-8, 2^m}, m >= 6.
APSet closed_form_m_minus_3(int m);
/// Spectrum of RM(m-4,m): {0,16,24} ∪ {28,...,2^m-28} ∪ {2^m-24, 2^m-16, 2^m}, m >= 8.
APSet closed_form_m_minus_4(int m);

struct DeriveOptions {
    unsigned threads = 1;          // for exhaustive base spectra
    unsigned max_dimension = 30;   // enumeration budget
};

/// Derivation dispatch over the supported families:
/// r in {0, 1, m-2, m-1, m}, (m-3, m) for m >= 6, (m-4, m) for m >= 8,
/// and the worked cases (3,7), (3,8), (4,9), (5,10).
/// Throws std::invalid_argument naming the missing baseline otherwise.
SpectrumResult derive_spectrum(int r, int m, const DeriveOptions& opts = {});

enum class ConjectureVerdict { Conforms, NotConforming, Inconclusive };

struct ConjectureReport {
    int c = 0;
    int m = 0;
    ConjectureVerdict verdict = ConjectureVerdict::Inconclusive;
    APSet a;       // low KT layer
    APSet b;       // middle band [2^{c+1}, 2^{c+1}+2^c]
    APSet c_run;   // central consecutive-even run
    APSet gap;     // nonempty when the spectrum itself is only Partial
    std::string detail;
    nlohmann::json to_json() const;
};

/// Checks that the spectrum of RM(m-c,m) has the shape
/// {0} ∪ A ∪ B ∪ C ∪ reflect(B) ∪ reflect(A) ∪ {2^m}.  Requires m > 2c-1.
ConjectureReport conjecture_check(int c, int m, const std::optional<APSet>& b_set = {},
                                  const DeriveOptions& opts = {});

struct SearchOptions {
    std::uint64_t max_evaluations = 2'000'000;
    std::uint64_t random_samples = 200'000;
    std::uint64_t seed = 1;
};

/// Looks for a degree-<=r function on m variables whose evaluation weight is
/// exactly `target`.  Absence of a result proves nothing.
std::optional<BooleanFunction> witness_search(int r, int m, std::uint64_t target,
                                              const SearchOptions& opts = {});

/// Bundled cited spectra: "rm_3_6", "rm_4_8", "rm_3_8".
/// Validated against upper_bound and reflection symmetry at load.
BaselineTable paper_baseline(std::string_view name);

}  // namespace rmspec
