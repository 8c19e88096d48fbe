// Grid scans over target squeezing vectors, classification of every grid
// point against a fixed base state, and the machine-readable writers shared
// with the command-line tool.

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>

#include "gmaj/channels.hpp"
#include "gmaj/classifier.hpp"
#include "gmaj/fock_spectra.hpp"

namespace gmaj {

// Lossless decimal rendering of a double (17 significant digits).
std::string g17(double value);

// Inclusive arithmetic range start, start + step, ..., stop.
struct GridAxis {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    std::size_t count() const;
    double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

// Grid coordinates: the (r1'-r2', r1'+r2') plane, or r1'/r2' directly.
enum class ScanFrame { kDiagonal, kDirect };

enum class OutputFormat { kCsv, kJsonl };

struct ScanConfig {
    SqueezingVector base;          // two modes
    ScanFrame frame = ScanFrame::kDiagonal;
    GridAxis axis_a{0.0, 1.2, 0.01};  // x (diagonal frame) or r1' (direct)
    GridAxis axis_b{0.8, 3.2, 0.01};  // y (diagonal frame) or r2' (direct)
    std::size_t depth = 4096;
    double tol = 1e-12;
    double slack_ceiling = 1e-6;
    OutputFormat format = OutputFormat::kCsv;
    unsigned jobs = 1;
};

constexpr std::size_t kCategoryCount = 8;

struct ScanSummary {
    std::array<std::size_t, kCategoryCount> counts{};  // indexed by ConversionCategory
    std::size_t skipped = 0;   // grid points violating r1' >= r2' >= 0
    std::size_t records = 0;
    std::size_t total_points = 0;

    std::size_t count(ConversionCategory category) const {
        return counts[static_cast<std::size_t>(category)];
    }
};

// Classifies every grid point against the base state and streams one record
// per valid point to `out` in row-major order (axis_b outer, axis_a inner).
// The output is a pure function of the config: identical bytes for identical
// configs, regardless of the parallelism degree.
ScanSummary run_scan(const ScanConfig& config, std::ostream& out);

void print_summary(const ScanSummary& summary, std::ostream& out);

// rows x cols slice of a channel matrix as CSV, with trailing comment lines
// holding the column and row sums at this truncation.
void write_channel_matrix_csv(const ChannelSpec& spec, std::size_t rows, std::size_t cols,
                              std::ostream& out);

// Top-K eigenvalues and partial sums of the product spectrum of r.
void write_spectrum(const SqueezingVector& r, std::size_t depth, OutputFormat format,
                    std::ostream& out);

// Single-pair conversion record (shared by `check` output paths).
void write_check_record(const SqueezingVector& r, const SqueezingVector& r_prime,
                        const ConversionVerdict& verdict, std::ostream& out);

}  // namespace gmaj
