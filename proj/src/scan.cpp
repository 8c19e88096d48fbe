#include "gmaj/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gmaj/kahan_sum.hpp"
#include "gmaj/majorization.hpp"

namespace gmaj {

std::string g17(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::size_t GridAxis::count() const {
    if (!(step > 0.0)) {
        throw std::invalid_argument("GridAxis: step must be > 0");
    }
    if (stop < start) {
        throw std::invalid_argument("GridAxis: stop must be >= start");
    }
    return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

namespace {

struct ScanRecord {
    double r1 = 0.0, r2 = 0.0;  // target squeezing parameters
    double x = 0.0, y = 0.0;    // diagonal-frame coordinates r1-r2, r1+r2
    ConversionVerdict verdict;
};

std::string frame_name(ScanFrame frame) {
    return frame == ScanFrame::kDiagonal ? "diagonal" : "direct";
}

void append_evidence_json(const ConversionEvidence& ev, std::string& line) {
    line += "\"glocc_forward\":";
    line += ev.glocc_forward ? "true" : "false";
    line += ",\"glocc_reverse\":";
    line += ev.glocc_reverse ? "true" : "false";
    line += ",\"product_forward\":" + g17(ev.product_forward);
    line += ",\"product_reverse\":" + g17(ev.product_reverse);
    if (ev.numeric) {
        line += ",\"numeric_relation\":\"";
        line += to_string(ev.numeric->relation);
        line += "\",\"numeric_slack\":" + g17(ev.numeric->slack);
    } else {
        line += ",\"numeric_relation\":null,\"numeric_slack\":null";
    }
}

void write_record_csv(const ScanRecord& rec, std::ostream& out) {
    const ConversionEvidence& ev = rec.verdict.evidence;
    out << g17(rec.r1) << ',' << g17(rec.r2) << ',' << g17(rec.x) << ',' << g17(rec.y) << ','
        << to_string(rec.verdict.category) << ',' << (ev.glocc_forward ? '1' : '0') << ','
        << (ev.glocc_reverse ? '1' : '0') << ',' << g17(ev.product_forward) << ','
        << g17(ev.product_reverse) << ',';
    if (ev.numeric) {
        out << to_string(ev.numeric->relation) << ',' << g17(ev.numeric->slack);
    } else {
        out << ',';
    }
    out << '\n';
}

void write_record_jsonl(const ScanRecord& rec, std::ostream& out) {
    std::string line = "{\"r1\":" + g17(rec.r1) + ",\"r2\":" + g17(rec.r2) +
                       ",\"x\":" + g17(rec.x) + ",\"y\":" + g17(rec.y) + ",\"category\":\"";
    line += to_string(rec.verdict.category);
    line += "\",";
    append_evidence_json(rec.verdict.evidence, line);
    line += "}";
    out << line << '\n';
}

std::string vector_json(const SqueezingVector& r) {
    std::string text = "[";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0) text += ',';
        text += g17(r[i]);
    }
    text += ']';
    return text;
}

std::string vector_csv(const SqueezingVector& r) {
    std::string text;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0) text += ',';
        text += g17(r[i]);
    }
    return text;
}

}  // namespace

ScanSummary run_scan(const ScanConfig& config, std::ostream& out) {
    if (config.base.size() != 2) {
        throw std::invalid_argument("run_scan: the base state must have exactly two modes");
    }
    if (config.depth == 0) {
        throw std::invalid_argument("run_scan: depth must be >= 1");
    }
    const std::size_t na = config.axis_a.count();
    const std::size_t nb = config.axis_b.count();

    const RankedEigenvalues base_ranked = ranked_spectrum(config.base, config.depth);
    const ClassifyOptions options{config.depth, config.tol, config.slack_ceiling};

    std::vector<std::optional<ScanRecord>> cells(na * nb);

    // Rows are handed out through an atomic counter; every cell is written by
    // exactly one worker and each point's result is independent of scheduling,
    // so the streamed output is identical for any parallelism degree.
    std::atomic<std::size_t> next_row{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto process_rows = [&]() {
        try {
            while (true) {
                const std::size_t ib = next_row.fetch_add(1);
                if (ib >= nb) break;
                const double b = config.axis_b.at(ib);
                for (std::size_t ia = 0; ia < na; ++ia) {
                    const double a = config.axis_a.at(ia);
                    double r1, r2, x, y;
                    if (config.frame == ScanFrame::kDiagonal) {
                        x = a;
                        y = b;
                        r1 = 0.5 * (y + x);
                        r2 = 0.5 * (y - x);
                    } else {
                        r1 = a;
                        r2 = b;
                        x = r1 - r2;
                        y = r1 + r2;
                    }
                    if (!(r2 >= 0.0 && r1 >= r2)) continue;  // outside the ordered domain
                    const SqueezingVector target({r1, r2});
                    ScanRecord rec{r1, r2, x, y,
                                   classify(config.base, target, base_ranked, options)};
                    cells[ib * na + ia] = std::move(rec);
                }
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1) {
        process_rows();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(process_rows);
        for (std::thread& w : workers) w.join();
    }
    if (failure) std::rethrow_exception(failure);

    if (config.format == OutputFormat::kCsv) {
        out << "# gmaj scan v1\n";
        out << "# base=" << vector_csv(config.base) << " frame=" << frame_name(config.frame)
            << " depth=" << config.depth << " tol=" << g17(config.tol)
            << " slack_ceiling=" << g17(config.slack_ceiling) << '\n';
        out << "# columns: r1,r2,x,y,category,glocc_forward,glocc_reverse,"
               "product_forward,product_reverse,numeric_relation,numeric_slack\n";
    } else {
        out << "{\"schema\":\"gmaj-scan-v1\",\"base\":" << vector_json(config.base)
            << ",\"frame\":\"" << frame_name(config.frame) << "\",\"depth\":" << config.depth
            << ",\"tol\":" << g17(config.tol) << ",\"slack_ceiling\":" << g17(config.slack_ceiling)
            << "}\n";
    }

    ScanSummary summary;
    summary.total_points = na * nb;
    for (const auto& cell : cells) {
        if (!cell) {
            ++summary.skipped;
            continue;
        }
        ++summary.records;
        ++summary.counts[static_cast<std::size_t>(cell->verdict.category)];
        if (config.format == OutputFormat::kCsv) {
            write_record_csv(*cell, out);
        } else {
            write_record_jsonl(*cell, out);
        }
    }
    return summary;
}

void print_summary(const ScanSummary& summary, std::ostream& out) {
    out << "points: " << summary.total_points << " (records: " << summary.records
        << ", skipped: " << summary.skipped << ")\n";
    for (std::size_t c = 0; c < kCategoryCount; ++c) {
        if (summary.counts[c] == 0) continue;
        out << "  " << to_string(static_cast<ConversionCategory>(c)) << ": " << summary.counts[c]
            << '\n';
    }
}

void write_channel_matrix_csv(const ChannelSpec& spec, std::size_t rows, std::size_t cols,
                              std::ostream& out) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("write_channel_matrix_csv: rows and cols must be >= 1");
    }
    const ChannelMatrixView matrix(spec);
    out << "# gmaj channel-matrix v1\n";
    out << "# kind=" << to_string(spec.kind()) << " parameter=" << g17(spec.parameter())
        << " rows=" << rows << " cols=" << cols << '\n';
    std::vector<KahanSum> column_sums(cols);
    std::vector<KahanSum> row_sums(rows);
    for (std::size_t n = 1; n <= rows; ++n) {
        for (std::size_t m = 1; m <= cols; ++m) {
            const double e = matrix.entry(n, m);
            row_sums[n - 1].add(e);
            column_sums[m - 1].add(e);
            out << g17(e) << (m == cols ? '\n' : ',');
        }
    }
    out << "# colsum:";
    for (std::size_t m = 0; m < cols; ++m) out << ' ' << g17(column_sums[m].value());
    out << '\n';
    out << "# rowsum:";
    for (std::size_t n = 0; n < rows; ++n) out << ' ' << g17(row_sums[n].value());
    out << '\n';
}

void write_spectrum(const SqueezingVector& r, std::size_t depth, OutputFormat format,
                    std::ostream& out) {
    const RankedEigenvalues ranked = ranked_spectrum(r, depth);
    const std::vector<double> sums = partial_sums(ranked);
    if (format == OutputFormat::kCsv) {
        out << "# gmaj spectrum v1\n";
        out << "# r=" << vector_csv(r) << " depth=" << depth << '\n';
        out << "# columns: k,value,partial_sum\n";
        for (std::size_t k = 0; k < ranked.values.size(); ++k) {
            out << (k + 1) << ',' << g17(ranked.values[k]) << ',' << g17(sums[k]) << '\n';
        }
        out << "# captured_mass=" << g17(ranked.captured_mass)
            << " tail_mass=" << g17(ranked.tail_mass) << '\n';
    } else {
        out << "{\"schema\":\"gmaj-spectrum-v1\",\"r\":" << vector_json(r)
            << ",\"depth\":" << depth << "}\n";
        for (std::size_t k = 0; k < ranked.values.size(); ++k) {
            out << "{\"k\":" << (k + 1) << ",\"value\":" << g17(ranked.values[k])
                << ",\"partial_sum\":" << g17(sums[k]) << "}\n";
        }
        out << "{\"captured_mass\":" << g17(ranked.captured_mass)
            << ",\"tail_mass\":" << g17(ranked.tail_mass) << "}\n";
    }
}

void write_check_record(const SqueezingVector& r, const SqueezingVector& r_prime,
                        const ConversionVerdict& verdict, std::ostream& out) {
    std::string line = "{\"schema\":\"gmaj-check-v1\",\"from\":" + vector_json(r) +
                       ",\"to\":" + vector_json(r_prime) + ",\"category\":\"";
    line += to_string(verdict.category);
    line += "\",";
    append_evidence_json(verdict.evidence, line);
    if (verdict.evidence.numeric) {
        const MajorizationVerdict& numeric = *verdict.evidence.numeric;
        line += ",\"numeric_depth\":" + std::to_string(numeric.depth);
        line += ",\"numeric_witness_forward\":";
        line += numeric.witness_forward ? std::to_string(*numeric.witness_forward) : "null";
        line += ",\"numeric_witness_reverse\":";
        line += numeric.witness_reverse ? std::to_string(*numeric.witness_reverse) : "null";
    }
    line += "}";
    out << line << '\n';
}

}  // namespace gmaj
