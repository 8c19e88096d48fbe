#include "gmaj/channels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmaj/kahan_sum.hpp"

namespace gmaj {

namespace {

// Binomial coefficients are exact in integer arithmetic up to this upper
// index; beyond it the log-gamma form keeps 1e-12 relative accuracy without
// overflow.
constexpr std::size_t kExactBinomialLimit = 30;

double binomial_exact(std::size_t j, std::size_t i) {
    if (i > j) return 0.0;
    i = std::min(i, j - i);
    std::uint64_t c = 1;
    for (std::size_t t = 1; t <= i; ++t) {
        c = c * (j - i + t) / t;  // exact: c*(j-i+t) is divisible by t
    }
    return static_cast<double>(c);
}

double log_binomial(std::size_t j, std::size_t i) {
    return std::lgamma(static_cast<double>(j + 1)) - std::lgamma(static_cast<double>(i + 1)) -
           std::lgamma(static_cast<double>(j - i + 1));
}

// D(n, m) = C(n-1, m-1) (1-g2)^m g2^(n-m) for n >= m, with g2 = 1 - 1/G.
double amp_entry(double gain, std::size_t n, std::size_t m) {
    if (n < m) return 0.0;
    const double inv_gain = 1.0 / gain;
    const double gamma2 = 1.0 - inv_gain;
    if (gamma2 == 0.0) return n == m ? 1.0 : 0.0;  // G = 1: identity
    const std::size_t j = n - 1;
    const std::size_t i = m - 1;
    if (j <= kExactBinomialLimit) {
        return binomial_exact(j, i) * std::pow(inv_gain, static_cast<double>(m)) *
               std::pow(gamma2, static_cast<double>(n - m));
    }
    return std::exp(log_binomial(j, i) - static_cast<double>(m) * std::log(gain) +
                    static_cast<double>(n - m) * std::log(gamma2));
}

// D(n, m) = C(m-1, n-1) eta^(n-1) (1-eta)^(m-n) for m >= n.
double loss_entry(double eta, std::size_t n, std::size_t m) {
    if (m < n) return 0.0;
    const double reflect = 1.0 - eta;
    if (reflect == 0.0) return n == m ? 1.0 : 0.0;  // eta = 1: identity
    if (eta == 0.0) return n == 1 ? 1.0 : 0.0;      // everything to vacuum
    const std::size_t j = m - 1;
    const std::size_t i = n - 1;
    if (j <= kExactBinomialLimit) {
        return binomial_exact(j, i) * std::pow(eta, static_cast<double>(i)) *
               std::pow(reflect, static_cast<double>(j - i));
    }
    return std::exp(log_binomial(j, i) + static_cast<double>(i) * std::log(eta) +
                    static_cast<double>(j - i) * std::log1p(-eta));
}

void require_index(std::size_t value, const char* what) {
    if (value == 0) {
        throw std::invalid_argument(std::string(what) + " must be >= 1");
    }
}

void require_gain(double gain) {
    if (!(gain >= 1.0)) {
        throw std::invalid_argument("amplifier gain must be >= 1");
    }
}

void require_transmittance(double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("loss transmittance must lie in (0, 1]");
    }
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
    return kind == ChannelKind::kLoss ? "LOSS" : "AMP";
}

ChannelSpec ChannelSpec::loss(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("ChannelSpec::loss: eta must lie in [0, 1]");
    }
    return ChannelSpec(ChannelKind::kLoss, eta);
}

ChannelSpec ChannelSpec::amp(double gain) {
    if (!(gain >= 1.0)) {
        throw std::invalid_argument("ChannelSpec::amp: gain must be >= 1");
    }
    return ChannelSpec(ChannelKind::kAmp, gain);
}

double ChannelMatrixView::entry(std::size_t n, std::size_t m) const {
    require_index(n, "row index");
    require_index(m, "column index");
    return spec_.kind() == ChannelKind::kAmp ? amp_entry(spec_.parameter(), n, m)
                                             : loss_entry(spec_.parameter(), n, m);
}

double amp_column_sum(double gain, std::size_t m, std::size_t truncation) {
    require_gain(gain);
    require_index(m, "column index");
    if (truncation < m) {
        throw std::invalid_argument("amp_column_sum: truncation must be >= m");
    }
    KahanSum sum;
    for (std::size_t n = m; n <= truncation; ++n) sum.add(amp_entry(gain, n, m));
    return sum.value();
}

double amp_row_sum(double gain, std::size_t n) {
    require_gain(gain);
    require_index(n, "row index");
    return 1.0 / gain;
}

double amp_row_sum_truncated(double gain, std::size_t n, std::size_t truncation) {
    require_gain(gain);
    require_index(n, "row index");
    require_index(truncation, "truncation");
    KahanSum sum;
    for (std::size_t m = 1; m <= std::min(n, truncation); ++m) sum.add(amp_entry(gain, n, m));
    return sum.value();
}

double loss_column_sum(double eta, std::size_t m) {
    require_transmittance(eta);
    require_index(m, "column index");
    KahanSum sum;
    for (std::size_t n = 1; n <= m; ++n) sum.add(loss_entry(eta, n, m));
    return sum.value();
}

double loss_row_sum(double eta, std::size_t n, std::size_t truncation) {
    require_transmittance(eta);
    require_index(n, "row index");
    if (truncation < n) {
        throw std::invalid_argument("loss_row_sum: truncation must be >= n");
    }
    KahanSum sum;
    for (std::size_t m = n; m <= truncation; ++m) sum.add(loss_entry(eta, n, m));
    return sum.value();
}

double apply_channel(const ChannelSpec& spec, double nu_in) {
    if (!(nu_in >= 0.0)) {
        throw std::invalid_argument("apply_channel: nu_in must be >= 0");
    }
    if (spec.kind() == ChannelKind::kLoss) return spec.parameter() * nu_in;
    return spec.parameter() * nu_in + (spec.parameter() - 1.0);
}

ChannelSpec derive_channel(double nu_from, double nu_to) {
    if (!(nu_from >= 0.0) || !(nu_to >= 0.0)) {
        throw std::invalid_argument("derive_channel: occupations must be >= 0");
    }
    if (nu_to <= nu_from) {
        return ChannelSpec::loss(nu_from == 0.0 ? 1.0 : nu_to / nu_from);
    }
    return ChannelSpec::amp((nu_to + 1.0) / (nu_from + 1.0));
}

double matrix_action_check(const ChannelSpec& spec, double x_in, std::size_t depth,
                           std::size_t rows) {
    if (!(x_in >= 0.0 && x_in < 1.0)) {
        throw std::invalid_argument("matrix_action_check: x_in must lie in [0, 1)");
    }
    require_index(depth, "depth");
    if (rows == 0) rows = depth;

    const ChannelMatrixView matrix(spec);

    // Input geometric vector and the analytic thermal output it must map to.
    std::vector<double> lambda_in(depth);
    for (std::size_t m = 0; m < depth; ++m) {
        lambda_in[m] = x_in == 0.0 ? (m == 0 ? 1.0 : 0.0)
                                   : (1.0 - x_in) * std::pow(x_in, static_cast<double>(m));
    }
    const double nu_out = apply_channel(spec, x_in / (1.0 - x_in));
    const double x_out = nu_out / (nu_out + 1.0);

    double worst = 0.0;
    for (std::size_t n = 1; n <= rows; ++n) {
        KahanSum acc;
        for (std::size_t m = 1; m <= depth; ++m) {
            const double e = matrix.entry(n, m);
            if (e != 0.0) acc.add(e * lambda_in[m - 1]);
        }
        const double expected = x_out == 0.0
                                    ? (n == 1 ? 1.0 : 0.0)
                                    : (1.0 - x_out) * std::pow(x_out, static_cast<double>(n - 1));
        worst = std::max(worst, std::abs(acc.value() - expected));
    }
    return worst;
}

StochasticityCertificate stochasticity_certificate(std::span<const ChannelSpec> channels) {
    if (channels.empty()) {
        throw std::invalid_argument("stochasticity_certificate: channel list must be non-empty");
    }
    double product = 1.0;
    for (const ChannelSpec& c : channels) product *= c.tau();
    return {product >= 1.0, product};
}

}  // namespace gmaj
