#include "gmaj/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gmaj/classifier.hpp"
#include "gmaj/scan.hpp"

namespace gmaj {

namespace {

constexpr int kExitUndecided = 3;
constexpr int kExitDomainError = 2;

GridAxis parse_axis(const std::string& text) {
    GridAxis axis;
    char trailing = '\0';
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &axis.start, &axis.stop, &axis.step,
                    &trailing) != 3) {
        throw std::invalid_argument("grid axis must be start:stop:step, got '" + text + "'");
    }
    axis.count();  // validates step and ordering
    return axis;
}

std::pair<GridAxis, GridAxis> parse_grid(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("grid must be aStart:aStop:aStep,bStart:bStop:bStep");
    }
    return {parse_axis(text.substr(0, comma)), parse_axis(text.substr(comma + 1))};
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + path + "'");
    }
    return file;
}

void print_check_human(const SqueezingVector& from, const SqueezingVector& to,
                       const ConversionVerdict& verdict, std::ostream& out) {
    auto render = [](const SqueezingVector& v) {
        std::string text;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) text += ", ";
            text += g17(v[i]);
        }
        return text;
    };
    auto render_db = [](const SqueezingVector& v) {
        std::string text;
        char buffer[32];
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) text += ", ";
            std::snprintf(buffer, sizeof(buffer), "%.2f dB", squeezing_to_db(v[i]));
            text += buffer;
        }
        return text;
    };
    const ConversionEvidence& ev = verdict.evidence;
    out << "from:     (" << render(from) << ")  [" << render_db(from) << "]\n";
    out << "to:       (" << render(to) << ")  [" << render_db(to) << "]\n";
    out << "category: " << to_string(verdict.category) << '\n';
    out << "evidence:\n";
    out << "  componentwise dominance: forward " << (ev.glocc_forward ? "yes" : "no")
        << ", reverse " << (ev.glocc_reverse ? "yes" : "no") << '\n';
    out << "  channel tau product:     forward " << g17(ev.product_forward) << ", reverse "
        << g17(ev.product_reverse) << '\n';
    if (ev.numeric) {
        const MajorizationVerdict& numeric = *ev.numeric;
        out << "  numeric oracle:          " << to_string(numeric.relation) << " at depth "
            << numeric.depth << ", slack " << g17(numeric.slack);
        if (numeric.witness_forward) {
            out << ", forward witness k=" << *numeric.witness_forward;
        }
        if (numeric.witness_reverse) {
            out << ", reverse witness k=" << *numeric.witness_reverse;
        }
        out << '\n';
    } else {
        out << "  numeric oracle:          not consulted\n";
    }
}

struct CheckArgs {
    std::string from, to;
    std::size_t depth = 4096;
    double tol = 1e-12;
    double slack_ceiling = 1e-6;
    std::string format = "text";
    std::string out_path;
};

struct ScanArgs {
    std::string base;
    std::string grid;
    std::string frame = "diagonal";
    std::size_t depth = 4096;
    double tol = 1e-12;
    double slack_ceiling = 1e-6;
    std::string format = "csv";
    std::string out_path;
    unsigned jobs = 1;
};

struct MatrixArgs {
    std::string kind;
    double parameter = 1.0;
    std::size_t rows = 10;
    std::size_t cols = 10;
    std::string out_path;
};

struct SpectrumArgs {
    std::string r;
    std::size_t depth = 32;
    std::string format = "csv";
    std::string out_path;
};

int run_check(const CheckArgs& args) {
    const SqueezingVector from = SqueezingVector::parse(args.from);
    const SqueezingVector to = SqueezingVector::parse(args.to);
    const ClassifyOptions options{args.depth, args.tol, args.slack_ceiling};
    const ConversionVerdict verdict = classify(from, to, options);

    if (args.format == "text") {
        print_check_human(from, to, verdict, std::cout);
    }
    if (args.format == "jsonl" || args.out_path.empty()) {
        write_check_record(from, to, verdict, std::cout);
    }
    if (!args.out_path.empty()) {
        std::ofstream file = open_output(args.out_path);
        write_check_record(from, to, verdict, file);
    }
    return verdict.category == ConversionCategory::kUndecided ? kExitUndecided : 0;
}

int run_scan_cmd(const ScanArgs& args) {
    ScanConfig config{SqueezingVector::parse(args.base)};
    if (!args.grid.empty()) {
        std::tie(config.axis_a, config.axis_b) = parse_grid(args.grid);
    }
    config.frame = args.frame == "direct" ? ScanFrame::kDirect : ScanFrame::kDiagonal;
    config.depth = args.depth;
    config.tol = args.tol;
    config.slack_ceiling = args.slack_ceiling;
    config.format = args.format == "jsonl" ? OutputFormat::kJsonl : OutputFormat::kCsv;
    config.jobs = args.jobs;

    ScanSummary summary;
    if (args.out_path.empty()) {
        summary = run_scan(config, std::cout);
        print_summary(summary, std::cerr);
    } else {
        std::ofstream file = open_output(args.out_path);
        summary = run_scan(config, file);
        print_summary(summary, std::cout);
    }
    return 0;
}

int run_matrix(const MatrixArgs& args) {
    const ChannelSpec spec =
        args.kind == "amp" ? ChannelSpec::amp(args.parameter) : ChannelSpec::loss(args.parameter);
    if (spec.kind() == ChannelKind::kLoss && spec.parameter() == 0.0) {
        throw std::invalid_argument("matrix: loss transmittance must be > 0");
    }
    if (args.out_path.empty()) {
        write_channel_matrix_csv(spec, args.rows, args.cols, std::cout);
    } else {
        std::ofstream file = open_output(args.out_path);
        write_channel_matrix_csv(spec, args.rows, args.cols, file);
    }
    return 0;
}

int run_spectrum(const SpectrumArgs& args) {
    const SqueezingVector r = SqueezingVector::parse(args.r);
    const OutputFormat format =
        args.format == "jsonl" ? OutputFormat::kJsonl : OutputFormat::kCsv;
    if (args.out_path.empty()) {
        write_spectrum(r, args.depth, format, std::cout);
    } else {
        std::ofstream file = open_output(args.out_path);
        write_spectrum(r, args.depth, format, file);
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"LOCC convertibility of pure bipartite Gaussian states"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file (flags override it)");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand(
        "check", "Classify the conversion between two normal-form states");
    check->add_option("from", check_args.from, "Source squeezing vector, e.g. 1.15,0.88")
        ->required();
    check->add_option("to", check_args.to, "Target squeezing vector")->required();
    check->add_option("--depth", check_args.depth, "Enumeration depth K for the numeric oracle");
    check->add_option("--tol", check_args.tol, "Absolute tolerance on partial sums");
    check->add_option("--slack-ceiling", check_args.slack_ceiling,
                      "Largest certification slack accepted for a positive verdict");
    check->add_option("--format", check_args.format, "Output format")
        ->check(CLI::IsMember({"text", "jsonl"}));
    check->add_option("--out", check_args.out_path, "Also write the JSON record to this file");

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand(
        "scan", "Classify a grid of target states against a fixed base state");
    scan->add_option("--base", scan_args.base, "Base squeezing vector (two modes)")->required();
    scan->add_option("--grid", scan_args.grid,
                     "Axes as aStart:aStop:aStep,bStart:bStop:bStep "
                     "(default 0:1.2:0.01,0.8:3.2:0.01)");
    scan->add_option("--frame", scan_args.frame,
                     "Grid coordinates: diagonal = (r1-r2, r1+r2), direct = (r1, r2)")
        ->check(CLI::IsMember({"diagonal", "direct"}));
    scan->add_option("--depth", scan_args.depth, "Enumeration depth K for the numeric oracle");
    scan->add_option("--tol", scan_args.tol, "Absolute tolerance on partial sums");
    scan->add_option("--slack-ceiling", scan_args.slack_ceiling,
                     "Largest certification slack accepted for a positive verdict");
    scan->add_option("--format", scan_args.format, "Record format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    scan->add_option("--out", scan_args.out_path, "Output file (default: stdout)");
    scan->add_option("--jobs", scan_args.jobs, "Worker threads (output is identical for any value)");

    MatrixArgs matrix_args;
    CLI::App* matrix = app.add_subcommand("matrix", "Dump a truncated channel matrix as CSV");
    matrix->add_option("--kind", matrix_args.kind, "Channel kind")
        ->required()
        ->check(CLI::IsMember({"loss", "amp"}));
    matrix->add_option("--parameter", matrix_args.parameter,
                       "Transmittance (loss) or gain (amp)")
        ->required();
    matrix->add_option("--rows", matrix_args.rows, "Rows to print");
    matrix->add_option("--cols", matrix_args.cols, "Columns to print");
    matrix->add_option("--out", matrix_args.out_path, "Output file (default: stdout)");

    SpectrumArgs spectrum_args;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Dump the largest eigenvalues of a state's reduced spectrum");
    spectrum->add_option("r", spectrum_args.r, "Squeezing vector, e.g. 1.15,0.88")->required();
    spectrum->add_option("--depth", spectrum_args.depth, "Number of eigenvalues to enumerate");
    spectrum->add_option("--format", spectrum_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    spectrum->add_option("--out", spectrum_args.out_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*check) return run_check(check_args);
        if (*scan) return run_scan_cmd(scan_args);
        if (*matrix) return run_matrix(matrix_args);
        if (*spectrum) return run_spectrum(spectrum_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return 0;
}

}  // namespace gmaj
