// Certified comparison of two (possibly infinite) discrete distributions
// under the majorization preorder, at finite enumeration depth.
//
// Verdict semantics are two-tier: a partial-sum violation beyond the
// tolerance is conclusive (the exact top-k sums already disagree), while a
// positive verdict is certified only up to a slack equal to the unenumerated
// tail mass plus the tolerance.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gmaj/fock_spectra.hpp"

namespace gmaj {

enum class Relation {
    kMajorizes,     // p > q, certified up to `slack`
    kMajorizedBy,   // q > p, certified up to `slack`
    kEqual,         // partial sums agree within tol at every k
    kIncomparable,  // conclusive violations in both directions
    kUndecided,     // indistinguishable within tol, or slack above ceiling
};

std::string_view to_string(Relation relation);

struct CompareOptions {
    double tol = 1e-12;           // absolute tolerance on partial sums
    double slack_ceiling = 1e-6;  // positives with larger slack degrade to kUndecided
};

struct MajorizationVerdict {
    Relation relation = Relation::kUndecided;
    std::size_t depth = 0;
    // Certification slack of a positive verdict (tail mass + tol); 0 for the
    // conclusive kIncomparable.
    double slack = 0.0;
    // First k (1-based) with S_k(p) < S_k(q) - tol, i.e. the index proving
    // that p does not majorize q; and the mirror-image witness.
    std::optional<std::size_t> witness_forward;
    std::optional<std::size_t> witness_reverse;
    // Largest observed shortfalls max_k(S_k(q) - S_k(p)) and the reverse,
    // clamped at 0. Diagnostic companions to the witnesses.
    double max_shortfall_forward = 0.0;
    double max_shortfall_reverse = 0.0;
};

// S_k = sum of the k largest eigenvalues, k = 1..depth. Compensated
// summation; entries beyond the last enumerated value contribute 0, so the
// sequence is padded with its final value up to the requested depth.
std::vector<double> partial_sums(const RankedEigenvalues& ranked);

// Compares p against q at their common depth. Throws on depth mismatch.
MajorizationVerdict compare(const RankedEigenvalues& p, const RankedEigenvalues& q,
                            const CompareOptions& options = {});

}  // namespace gmaj
