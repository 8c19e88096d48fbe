#include "gmaj/classifier.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gmaj/channels.hpp"

namespace gmaj {

namespace {

void require_same_length(const SqueezingVector& r, const SqueezingVector& r_prime) {
    if (r.size() != r_prime.size()) {
        throw std::invalid_argument("squeezing vectors must have the same length");
    }
}

}  // namespace

std::string_view to_string(ConversionCategory category) {
    switch (category) {
        case ConversionCategory::kGloccForward: return "GLOCC_FORWARD";
        case ConversionCategory::kLoccForwardCriterion: return "LOCC_FORWARD_NONGAUSSIAN_CRITERION";
        case ConversionCategory::kLoccForwardNumeric: return "LOCC_FORWARD_NUMERIC";
        case ConversionCategory::kLoccReverseOnlyGlocc: return "LOCC_REVERSE_ONLY_GLOCC";
        case ConversionCategory::kLoccReverseOnlyCriterion: return "LOCC_REVERSE_ONLY_CRITERION";
        case ConversionCategory::kLoccReverseOnlyNumeric: return "LOCC_REVERSE_ONLY_NUMERIC";
        case ConversionCategory::kIncomparable: return "INCOMPARABLE";
        case ConversionCategory::kUndecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

bool glocc_condition(const SqueezingVector& r, const SqueezingVector& r_prime) {
    require_same_length(r, r_prime);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < r_prime[i]) return false;
    }
    return true;
}

double two_mode_criterion_ratio(const SqueezingVector& r, const SqueezingVector& r_prime) {
    require_same_length(r, r_prime);
    if (r.size() != 2) {
        throw std::invalid_argument("two_mode_criterion: exactly two modes required");
    }
    const double d1 = r_prime[0] - r[0];
    const double d2 = r_prime[1] - r[1];
    if (!((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))) {
        throw std::invalid_argument(
            "two_mode_criterion: component changes must have strictly opposite signs");
    }
    const double sign = d1 > 0.0 ? 1.0 : -1.0;
    const double numerator = std::sinh(r[0] + r[1]) + sign * std::sinh(r[0] - r[1]);
    const double denominator =
        std::sinh(r_prime[0] + r_prime[1]) + sign * std::sinh(r_prime[0] - r_prime[1]);
    return numerator / denominator;
}

bool two_mode_criterion(const SqueezingVector& r, const SqueezingVector& r_prime) {
    return two_mode_criterion_ratio(r, r_prime) >= 1.0;
}

CriterionResult channel_product_criterion(const SqueezingVector& r,
                                          const SqueezingVector& r_prime) {
    require_same_length(r, r_prime);
    // The certificate transforms the target state's reduced spectrum into the
    // source state's one, so the channels run from nu'_i to nu_i.
    const std::vector<double> nu = r.occupations();
    const std::vector<double> nu_prime = r_prime.occupations();
    std::vector<ChannelSpec> channels;
    channels.reserve(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) {
        channels.push_back(derive_channel(nu_prime[i], nu[i]));
    }
    const StochasticityCertificate certificate = stochasticity_certificate(channels);
    return {certificate.certified, certificate.product};
}

ConversionVerdict classify(const SqueezingVector& r, const SqueezingVector& r_prime,
                           const ClassifyOptions& options) {
    return classify(r, r_prime, ranked_spectrum(r, options.depth), options);
}

ConversionVerdict classify(const SqueezingVector& r, const SqueezingVector& r_prime,
                           const RankedEigenvalues& ranked_r, const ClassifyOptions& options) {
    require_same_length(r, r_prime);
    if (ranked_r.depth != options.depth) {
        throw std::invalid_argument("classify: ranked_r depth differs from options.depth");
    }

    ConversionVerdict verdict;
    ConversionEvidence& ev = verdict.evidence;
    ev.glocc_forward = glocc_condition(r, r_prime);
    ev.glocc_reverse = glocc_condition(r_prime, r);
    ev.product_forward = channel_product_criterion(r, r_prime).product;
    ev.product_reverse = channel_product_criterion(r_prime, r).product;

    // Analytic cascade: the exact O(N) tests decide before the oracle runs.
    // Equality edges fold into the componentwise branches.
    if (ev.glocc_forward) {
        verdict.category = ConversionCategory::kGloccForward;
        return verdict;
    }
    if (ev.glocc_reverse) {
        // Not forward-dominant, so some component strictly increased:
        // a Gaussian LOCC exists in reverse and majorization is one-way.
        verdict.category = ConversionCategory::kLoccReverseOnlyGlocc;
        return verdict;
    }
    if (ev.product_forward >= 1.0) {
        verdict.category = ConversionCategory::kLoccForwardCriterion;
        return verdict;
    }
    if (ev.product_reverse >= 1.0) {
        verdict.category = ConversionCategory::kLoccReverseOnlyCriterion;
        return verdict;
    }

    // Numerical oracle. Forward transformation exists iff the target reduced
    // spectrum majorizes the source one.
    const RankedEigenvalues ranked_target = ranked_spectrum(r_prime, options.depth);
    const CompareOptions compare_options{options.tol, options.slack_ceiling};
    const MajorizationVerdict numeric = compare(ranked_target, ranked_r, compare_options);
    ev.numeric = numeric;
    switch (numeric.relation) {
        case Relation::kMajorizes:
            verdict.category = ConversionCategory::kLoccForwardNumeric;
            break;
        case Relation::kMajorizedBy:
            verdict.category = ConversionCategory::kLoccReverseOnlyNumeric;
            break;
        case Relation::kIncomparable:
            verdict.category = ConversionCategory::kIncomparable;
            break;
        default:
            verdict.category = ConversionCategory::kUndecided;
            break;
    }
    return verdict;
}

}  // namespace gmaj
