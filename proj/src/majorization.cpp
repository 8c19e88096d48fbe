#include "gmaj/majorization.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmaj/kahan_sum.hpp"

namespace gmaj {

std::string_view to_string(Relation relation) {
    switch (relation) {
        case Relation::kMajorizes: return "MAJORIZES";
        case Relation::kMajorizedBy: return "MAJORIZED_BY";
        case Relation::kEqual: return "EQUAL";
        case Relation::kIncomparable: return "INCOMPARABLE";
        case Relation::kUndecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

std::vector<double> partial_sums(const RankedEigenvalues& ranked) {
    std::vector<double> sums;
    sums.reserve(ranked.depth);
    KahanSum acc;
    for (double v : ranked.values) {
        acc.add(v);
        sums.push_back(acc.value());
    }
    // A spectrum with finitely many positive eigenvalues contributes nothing
    // past its last value; pad so k runs over the full requested depth.
    if (sums.size() < ranked.depth) {
        sums.resize(ranked.depth, sums.empty() ? 0.0 : sums.back());
    }
    return sums;
}

MajorizationVerdict compare(const RankedEigenvalues& p, const RankedEigenvalues& q,
                            const CompareOptions& options) {
    if (p.depth != q.depth) {
        throw std::invalid_argument("compare: inputs must share the same depth");
    }
    if (!(options.tol > 0.0)) {
        throw std::invalid_argument("compare: tol must be > 0");
    }

    const std::vector<double> sp = partial_sums(p);
    const std::vector<double> sq = partial_sums(q);

    MajorizationVerdict verdict;
    verdict.depth = p.depth;

    bool crossed_forward = false;  // any k with S_k(p) < S_k(q), however slightly
    bool crossed_reverse = false;
    for (std::size_t k = 0; k < sp.size(); ++k) {
        const double d = sq[k] - sp[k];
        if (d > 0.0) {
            crossed_forward = true;
            verdict.max_shortfall_forward = std::max(verdict.max_shortfall_forward, d);
            if (d > options.tol && !verdict.witness_forward) verdict.witness_forward = k + 1;
        } else if (d < 0.0) {
            crossed_reverse = true;
            verdict.max_shortfall_reverse = std::max(verdict.max_shortfall_reverse, -d);
            if (-d > options.tol && !verdict.witness_reverse) verdict.witness_reverse = k + 1;
        }
    }

    const bool forward_violated = verdict.witness_forward.has_value();
    const bool reverse_violated = verdict.witness_reverse.has_value();

    if (forward_violated && reverse_violated) {
        // Conclusive both ways: the exact top-k sums cross in both directions.
        verdict.relation = Relation::kIncomparable;
        verdict.slack = 0.0;
        return verdict;
    }
    if (forward_violated) {
        // p conclusively fails; q dominates everywhere up to tol, certified
        // for all k because S_k(q) >= 1 - tail_mass(q) past the horizon.
        verdict.slack = q.tail_mass + options.tol;
        verdict.relation =
            verdict.slack <= options.slack_ceiling ? Relation::kMajorizedBy : Relation::kUndecided;
        return verdict;
    }
    if (reverse_violated) {
        verdict.slack = p.tail_mass + options.tol;
        verdict.relation =
            verdict.slack <= options.slack_ceiling ? Relation::kMajorizes : Relation::kUndecided;
        return verdict;
    }

    // Every partial-sum difference lies within the tolerance band. EQUAL is a
    // truncated-equality statement about k <= K only, so the slack ceiling
    // does not apply to it.
    verdict.slack = std::max(p.tail_mass, q.tail_mass) + options.tol;
    if (crossed_forward && crossed_reverse) {
        // Sub-tolerance interlacing: equal, dominant, or incomparable are all
        // still on the table, so no call is made.
        verdict.relation = Relation::kUndecided;
    } else {
        verdict.relation = Relation::kEqual;
    }
    return verdict;
}

}  // namespace gmaj
