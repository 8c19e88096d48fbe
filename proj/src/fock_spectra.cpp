#include "gmaj/fock_spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>

#include "gmaj/kahan_sum.hpp"

namespace gmaj {

double squeezing_to_occupation(double r) {
    if (!(r >= 0.0)) {
        throw std::invalid_argument("squeezing_to_occupation: r must be >= 0");
    }
    const double s = std::sinh(r);
    return s * s;
}

double occupation_to_squeezing(double nu) {
    if (!(nu >= 0.0)) {
        throw std::invalid_argument("occupation_to_squeezing: nu must be >= 0");
    }
    return std::asinh(std::sqrt(nu));
}

double squeezing_to_db(double r) { return 20.0 * r / std::log(10.0); }

SqueezingVector::SqueezingVector(std::vector<double> r) : r_(std::move(r)) {
    if (r_.empty()) {
        throw std::invalid_argument("SqueezingVector: at least one mode required");
    }
    for (std::size_t i = 0; i < r_.size(); ++i) {
        if (!(r_[i] >= 0.0)) {
            throw std::invalid_argument("SqueezingVector: entries must be >= 0 and finite");
        }
        if (i > 0 && r_[i] > r_[i - 1]) {
            throw std::invalid_argument("SqueezingVector: entries must be sorted non-increasing");
        }
    }
}

SqueezingVector SqueezingVector::parse(std::string_view text) {
    std::vector<double> parsed;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string token(text.substr(pos, comma - pos));
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("SqueezingVector: cannot parse '" + token + "'");
        }
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
        if (used != token.size()) {
            throw std::invalid_argument("SqueezingVector: trailing characters in '" + token + "'");
        }
        parsed.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return SqueezingVector(std::move(parsed));
}

std::vector<double> SqueezingVector::occupations() const {
    std::vector<double> nu;
    nu.reserve(r_.size());
    for (double r : r_) nu.push_back(squeezing_to_occupation(r));
    return nu;
}

GeometricSpectrum::GeometricSpectrum(double ratio) : ratio_(ratio) {
    if (!(ratio >= 0.0 && ratio < 1.0)) {
        throw std::invalid_argument("GeometricSpectrum: ratio must lie in [0, 1)");
    }
}

GeometricSpectrum GeometricSpectrum::from_squeezing(double r) {
    if (!(r >= 0.0)) {
        throw std::invalid_argument("GeometricSpectrum: r must be >= 0");
    }
    const double t = std::tanh(r);
    return GeometricSpectrum(t * t);
}

GeometricSpectrum GeometricSpectrum::from_occupation(double nu) {
    if (!(nu >= 0.0)) {
        throw std::invalid_argument("GeometricSpectrum: nu must be >= 0");
    }
    return GeometricSpectrum(nu / (nu + 1.0));
}

double GeometricSpectrum::eigenvalue(std::size_t n) const {
    if (ratio_ == 0.0) return n == 0 ? 1.0 : 0.0;
    return (1.0 - ratio_) * std::pow(ratio_, static_cast<double>(n));
}

double GeometricSpectrum::partial_sum(std::size_t k) const {
    if (ratio_ == 0.0) return k == 0 ? 0.0 : 1.0;
    return 1.0 - std::pow(ratio_, static_cast<double>(k));
}

GeometricSpectrum spectrum_of(double r) { return GeometricSpectrum::from_squeezing(r); }

ProductSpectrum::ProductSpectrum(std::vector<GeometricSpectrum> modes) : modes_(std::move(modes)) {
    if (modes_.empty()) {
        throw std::invalid_argument("ProductSpectrum: at least one mode required");
    }
}

ProductSpectrum ProductSpectrum::of(const SqueezingVector& r) {
    std::vector<GeometricSpectrum> modes;
    modes.reserve(r.size());
    for (double ri : r.values()) modes.push_back(GeometricSpectrum::from_squeezing(ri));
    return ProductSpectrum(std::move(modes));
}

namespace {

// A frontier node: the joint eigenvalue in log form plus the offset of its
// exponent tuple in the arena.
struct FrontierNode {
    double log_value;
    std::size_t exponents_at;
};

struct FrontierLess {
    bool operator()(const FrontierNode& a, const FrontierNode& b) const noexcept {
        return a.log_value < b.log_value;
    }
};

}  // namespace

RankedEigenvalues top_k(const ProductSpectrum& spectrum, std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("top_k: K must be >= 1");
    }

    // Ordering is handled in log form, log lambda = sum log(1 - x_i)
    // + sum n_i log x_i, which stays finite however deep the lattice point;
    // the reported eigenvalue is assembled from direct powers, which is both
    // tighter and exact on dyadic ratios. Vacuum modes (x = 0) contribute the
    // fixed factor 1 at n = 0 and are dropped from the lattice.
    std::vector<double> log_ratio;
    std::vector<double> ratio;
    double log_prefactor = 0.0;
    double prefactor = 1.0;
    for (const GeometricSpectrum& mode : spectrum.modes()) {
        if (mode.ratio() == 0.0) continue;
        ratio.push_back(mode.ratio());
        log_ratio.push_back(std::log(mode.ratio()));
        log_prefactor += std::log1p(-mode.ratio());
        prefactor *= 1.0 - mode.ratio();
    }
    const std::size_t n_modes = log_ratio.size();

    RankedEigenvalues out;
    out.depth = k;
    if (n_modes == 0) {
        out.values = {1.0};
        out.captured_mass = 1.0;
        out.tail_mass = 0.0;
        return out;
    }

    // Max-heap frontier over the lattice. Each point is pushed exactly once:
    // from a popped node, coordinate i is incremented only while every
    // coordinate before i is zero, so a point is generated solely from the
    // parent obtained by decrementing its first nonzero coordinate. The
    // parent's eigenvalue is strictly larger, so parents always pop first.
    std::vector<std::uint32_t> arena(n_modes, 0);
    std::priority_queue<FrontierNode, std::vector<FrontierNode>, FrontierLess> heap;
    heap.push({log_prefactor, 0});

    out.values.reserve(k);
    KahanSum mass;
    while (!heap.empty() && out.values.size() < k) {
        const FrontierNode node = heap.top();
        heap.pop();
        double value = prefactor;
        for (std::size_t i = 0; i < n_modes; ++i) {
            value *= std::pow(ratio[i], static_cast<double>(arena[node.exponents_at + i]));
        }
        // round-off in the power products can jitter exact ties by an ulp;
        // the log-ordered pop sequence is the authoritative order
        if (!out.values.empty()) value = std::min(value, out.values.back());
        out.values.push_back(value);
        mass.add(value);

        for (std::size_t i = 0; i < n_modes; ++i) {
            const std::size_t child_at = arena.size();
            arena.resize(child_at + n_modes);
            for (std::size_t j = 0; j < n_modes; ++j) {
                arena[child_at + j] = arena[node.exponents_at + j];
            }
            arena[child_at + i] += 1;
            heap.push({node.log_value + log_ratio[i], child_at});
            if (arena[node.exponents_at + i] != 0) break;
        }
    }

    out.captured_mass = mass.value();
    out.tail_mass = std::max(0.0, 1.0 - out.captured_mass);
    return out;
}

RankedEigenvalues ranked_spectrum(const SqueezingVector& r, std::size_t k) {
    return top_k(ProductSpectrum::of(r), k);
}

}  // namespace gmaj
