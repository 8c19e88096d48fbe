// Eigenvalue laws of the reduced states of normal-form pure Gaussian states,
// and sorted enumeration of tensor-product spectra.

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace gmaj {

// Mean occupation of the reduced thermal state, nu = sinh^2(r). Requires r >= 0.
double squeezing_to_occupation(double r);

// Inverse of squeezing_to_occupation, r = asinh(sqrt(nu)). Requires nu >= 0.
double occupation_to_squeezing(double nu);

// Presentation-only conversion, dB = 20 r / ln 10.
double squeezing_to_db(double r);

// Ordered squeezing parameters (r_1 >= ... >= r_N >= 0, N >= 1) characterizing
// a normal-form pure bipartite Gaussian state.
class SqueezingVector {
public:
    explicit SqueezingVector(std::vector<double> r);

    // Parses "1.15,0.88". Throws std::invalid_argument on malformed input.
    static SqueezingVector parse(std::string_view text);

    std::size_t size() const noexcept { return r_.size(); }
    double operator[](std::size_t i) const noexcept { return r_[i]; }
    const std::vector<double>& values() const noexcept { return r_; }

    // Per-mode occupations sinh^2(r_i).
    std::vector<double> occupations() const;

    bool operator==(const SqueezingVector&) const = default;

private:
    std::vector<double> r_;
};

// Geometric eigenvalue law lambda_n = (1 - x) x^n of a single thermal mode,
// with ratio x = tanh^2(r) = nu / (nu + 1) in [0, 1).
class GeometricSpectrum {
public:
    explicit GeometricSpectrum(double ratio);

    static GeometricSpectrum from_squeezing(double r);    // x = tanh^2(r)
    static GeometricSpectrum from_occupation(double nu);  // x = nu / (nu + 1)

    double ratio() const noexcept { return ratio_; }
    double occupation() const noexcept { return ratio_ / (1.0 - ratio_); }

    double eigenvalue(std::size_t n) const;   // (1 - x) x^n
    double partial_sum(std::size_t k) const;  // 1 - x^k, closed form

private:
    double ratio_;
};

GeometricSpectrum spectrum_of(double r);

// Tensor product of thermal-mode spectra; the joint eigenvalue at lattice
// point (n_1, ..., n_N) is the product of the per-mode eigenvalues.
class ProductSpectrum {
public:
    explicit ProductSpectrum(std::vector<GeometricSpectrum> modes);
    static ProductSpectrum of(const SqueezingVector& r);

    const std::vector<GeometricSpectrum>& modes() const noexcept { return modes_; }
    std::size_t mode_count() const noexcept { return modes_.size(); }

private:
    std::vector<GeometricSpectrum> modes_;
};

// Top-K slice of a product spectrum. values are sorted non-increasing;
// values.size() == depth except for the all-vacuum spectrum, whose single
// positive eigenvalue exhausts the list early. Every eigenvalue not
// enumerated is <= values.back().
struct RankedEigenvalues {
    std::vector<double> values;
    double captured_mass = 0.0;  // sum of values
    double tail_mass = 0.0;      // 1 - captured_mass, clamped at 0
    std::size_t depth = 0;       // requested K
};

// The K largest joint eigenvalues in non-increasing order (ties in arbitrary
// order). Heap-frontier enumeration over the index lattice; cost is
// O(K log K * N) candidates and a dense grid is never materialized.
RankedEigenvalues top_k(const ProductSpectrum& spectrum, std::size_t k);

// Convenience: top_k of the product spectrum of a squeezing vector.
RankedEigenvalues ranked_spectrum(const SqueezingVector& r, std::size_t k);

}  // namespace gmaj
