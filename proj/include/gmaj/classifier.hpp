// Decides the conversion relationship between two normal-form pure Gaussian
// states: analytic criteria first, numerical majorization oracle as the
// fallback.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "gmaj/fock_spectra.hpp"
#include "gmaj/majorization.hpp"

namespace gmaj {

enum class ConversionCategory {
    kGloccForward,            // componentwise squeezing dominance: a Gaussian LOCC exists
    kLoccForwardCriterion,    // channel-product certificate: a (non-Gaussian) LOCC exists
    kLoccForwardNumeric,      // numeric majorization only
    kLoccReverseOnlyGlocc,    // reverse Gaussian LOCC exists, forward impossible
    kLoccReverseOnlyCriterion,
    kLoccReverseOnlyNumeric,
    kIncomparable,            // no deterministic LOCC either way
    kUndecided,
};

std::string_view to_string(ConversionCategory category);

struct ConversionEvidence {
    bool glocc_forward = false;   // r_i >= r'_i for all i
    bool glocc_reverse = false;   // r'_i >= r_i for all i
    double product_forward = 0.0; // channel tau product certifying r -> r'
    double product_reverse = 0.0; // and the reverse direction
    std::optional<MajorizationVerdict> numeric;  // set when the oracle ran
};

struct ConversionVerdict {
    ConversionCategory category = ConversionCategory::kUndecided;
    ConversionEvidence evidence;
};

struct ClassifyOptions {
    std::size_t depth = 4096;
    double tol = 1e-12;
    double slack_ceiling = 1e-6;
};

// Componentwise dominance r_i >= r'_i for all i: the exact condition for a
// Gaussian LOCC transforming state(r) into state(r').
bool glocc_condition(const SqueezingVector& r, const SqueezingVector& r_prime);

// Two-mode criterion for squeezing vectors whose component changes have
// opposite signs. The ratio
//   [sinh(r1+r2) +- sinh(r1-r2)] / [sinh(r1'+r2') +- sinh(r1'-r2')]
// (+ when r1' > r1, - when r1' < r1) equals sinh(r_eta) cosh(r_G) /
// [sinh(r_eta') cosh(r_G')]; the transformation is possible when it is >= 1.
// Throws unless N = 2 and the sign pattern is strictly opposite.
double two_mode_criterion_ratio(const SqueezingVector& r, const SqueezingVector& r_prime);
bool two_mode_criterion(const SqueezingVector& r, const SqueezingVector& r_prime);

struct CriterionResult {
    bool holds = false;
    double product = 0.0;
};

// N-mode sufficient criterion: derives the per-mode quantum-limited channels
// taking the target state's reduced spectrum to the source state's one and
// reports their stochasticity certificate. holds == true implies the forward
// transformation state(r) -> state(r') is possible under some LOCC.
CriterionResult channel_product_criterion(const SqueezingVector& r,
                                          const SqueezingVector& r_prime);

// Full cascade: componentwise dominance both ways, then the channel-product
// criterion both ways, then the numerical majorization oracle at the given
// depth. Forward transformation exists iff spectrum(r') majorizes
// spectrum(r).
ConversionVerdict classify(const SqueezingVector& r, const SqueezingVector& r_prime,
                           const ClassifyOptions& options = {});

// Same cascade with a precomputed ranked spectrum of r (at options.depth),
// for grid scans that reuse the base state.
ConversionVerdict classify(const SqueezingVector& r, const SqueezingVector& r_prime,
                           const RankedEigenvalues& ranked_r, const ClassifyOptions& options = {});

}  // namespace gmaj
