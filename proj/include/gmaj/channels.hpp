// Quantum-limited amplifier and pure-loss channel as explicit infinite
// matrices on Fock-diagonal eigenvalue vectors, with the analytic
// row/column-sum identities and the column-stochasticity certificate.

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace gmaj {

enum class ChannelKind { kLoss, kAmp };

std::string_view to_string(ChannelKind kind);

// One quantum-limited Gaussian channel acting on a single mode: pure loss of
// transmittance eta, or amplification of gain G.
class ChannelSpec {
public:
    // eta in [0, 1]; eta = 0 is the degenerate everything-to-vacuum limit
    // produced when the target occupation is 0 (it is never certified).
    static ChannelSpec loss(double eta);
    // G >= 1.
    static ChannelSpec amp(double gain);

    ChannelKind kind() const noexcept { return kind_; }
    double parameter() const noexcept { return parameter_; }

    // eta for a loss channel, G for an amplifier.
    double tau() const noexcept { return parameter_; }

private:
    ChannelSpec(ChannelKind kind, double parameter) : kind_(kind), parameter_(parameter) {}

    ChannelKind kind_;
    double parameter_;
};

// Fock-basis transition matrix of a channel. Indices are 1-based as usually
// displayed: column m corresponds to m-1 input photons, row n to n-1 output
// photons.
//
//   amplifier:  D(n, m) = C(n-1, m-1) (1-g2)^m g2^(n-m)   for n >= m, else 0,
//               with g2 = 1 - 1/G (lower triangular; photons are created)
//   pure loss:  D(n, m) = C(m-1, n-1) eta^(n-1) (1-eta)^(m-n) for m >= n,
//               else 0 (upper triangular; photons are lost)
class ChannelMatrixView {
public:
    explicit ChannelMatrixView(ChannelSpec spec) : spec_(spec) {}

    double entry(std::size_t n, std::size_t m) const;
    const ChannelSpec& spec() const noexcept { return spec_; }

private:
    ChannelSpec spec_;
};

// Partial column sum sum_{n=m..T} D(n, m) of the amplifier matrix. Monotone
// non-decreasing in T and converging to 1. Requires G >= 1, T >= m >= 1.
double amp_column_sum(double gain, std::size_t m, std::size_t truncation);

// Analytic amplifier row sum, 1/G for every row (binomial series).
double amp_row_sum(double gain, std::size_t n);

// Finite row sum over the nonzero entries m = 1..min(n, T); equals 1/G once
// T >= n.
double amp_row_sum_truncated(double gain, std::size_t n, std::size_t truncation);

// Finite column sum of the loss matrix, n = 1..m; equals 1 by the binomial
// theorem. Requires 0 < eta <= 1.
double loss_column_sum(double eta, std::size_t m);

// Partial row sum sum_{m=n..T} D(n, m) of the loss matrix; converges to
// 1/eta as T grows. Requires 0 < eta <= 1, T >= n >= 1.
double loss_row_sum(double eta, std::size_t n, std::size_t truncation);

// Thermal fixed family: occupation of the output thermal state.
// Loss: eta * nu. Amplifier: G * nu + (G - 1).
double apply_channel(const ChannelSpec& spec, double nu_in);

// The unique quantum-limited channel mapping occupation nu_from to nu_to:
// loss with eta = nu_to/nu_from when the occupation drops (eta = 1 when both
// are 0), otherwise an amplifier with G = (nu_to+1)/(nu_from+1).
ChannelSpec derive_channel(double nu_from, double nu_to);

// Applies the matrix, truncated to `depth` columns, to the geometric
// eigenvalue vector of ratio x_in and returns the maximum absolute deviation
// from the analytic thermal output over the first `rows` entries (rows = 0
// means depth). The deviation shrinks as depth grows.
double matrix_action_check(const ChannelSpec& spec, double x_in, std::size_t depth,
                           std::size_t rows = 0);

struct StochasticityCertificate {
    bool certified = false;  // product >= 1: the tensor-product matrix is
                             // column-stochastic, so the input spectrum
                             // majorizes the output spectrum
    double product = 0.0;    // product of per-channel tau values
};

// Certificate for a tensor product of quantum-limited channels. Only the
// row/column-sum algebra is used; the product matrix is never materialized.
StochasticityCertificate stochasticity_certificate(std::span<const ChannelSpec> channels);

}  // namespace gmaj
