// thickcalc: evaluate expressions in the thick-distribution calculus, print
// the classical point-source identities, and run the numerical oracle suite.
//
// Exit codes: 0 success, 2 expression parse error, 3 evaluation error,
// 4 unknown command/name or bad invocation; `check` exits 1 on failed probes.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "thick/probe_suite.hpp"
#include "thick/thick.hpp"

namespace {

using namespace thick;
using dsl::Format;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitEval = 3;
constexpr int kExitUsage = 4;

Format parse_format(const std::string& name) {
    if (name == "latex") return Format::Latex;
    if (name == "tree") return Format::Tree;
    return Format::Plain;
}

void print_parse_diagnostic(const std::string& text, const dsl::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    std::istringstream is(text);
    std::string line;
    for (int i = 1; std::getline(is, line); ++i) {
        if (i != err.pos.line) continue;
        std::cerr << "  " << line << "\n  " << std::string(static_cast<size_t>(err.pos.column - 1), ' ')
                  << "^\n";
        break;
    }
}

int eval_one(const std::string& text, int dim, Format format) {
    try {
        std::cout << dsl::render(dsl::evaluate(dsl::parse(text, dim)), format) << "\n";
        return kExitOk;
    } catch (const dsl::ParseError& e) {
        print_parse_diagnostic(text, e);
        return kExitParse;
    } catch (const dsl::EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
}

int cmd_eval(const std::string& expression, const std::string& batch_path, int dim, Format format) {
    if (batch_path.empty()) return eval_one(expression, dim, format);

    std::ifstream in(batch_path);
    if (!in) {
        std::cerr << "error: cannot open batch file '" << batch_path << "'\n";
        return kExitUsage;
    }
    int rc = kExitOk;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        const std::string text = line.substr(begin, end - begin + 1);
        try {
            std::cout << dsl::render(dsl::evaluate(dsl::parse(text, dim)), format) << "\n";
        } catch (const dsl::ParseError& e) {
            std::cerr << batch_path << ":" << lineno << ": ";
            print_parse_diagnostic(text, e);
            std::cout << "error\n";
            if (rc == kExitOk) rc = kExitParse;
        } catch (const dsl::EvalError& e) {
            std::cerr << batch_path << ":" << lineno << ": error: " << e.what() << "\n";
            std::cout << "error\n";
            if (rc == kExitOk) rc = kExitEval;
        } catch (const std::invalid_argument& e) {
            std::cerr << batch_path << ":" << lineno << ": error: " << e.what() << "\n";
            std::cout << "error\n";
            if (rc == kExitOk) rc = kExitEval;
        }
    }
    return rc;
}

// ---- paper ----------------------------------------------------------------

struct PaperOptions {
    int dim = 3;
    Format format = Format::Plain;
    std::vector<int> indices;
    int i = 0;
    int j = 0;
};

void print_value(const dsl::Value& v, const std::string& label, Format format) {
    if (format == Format::Tree) {
        std::cout << dsl::render(v, Format::Tree) << "\n";
    } else {
        std::cout << "  " << label << ": " << dsl::render(v, format) << "\n";
    }
}

void print_header(const std::string& text, Format format) {
    if (format != Format::Tree) std::cout << text << "\n";
}

std::vector<std::pair<int, int>> index_pairs(const PaperOptions& opt) {
    if (opt.i != 0 || opt.j != 0) {
        const int i = opt.i == 0 ? 1 : opt.i;
        const int j = opt.j == 0 ? 1 : opt.j;
        if (i < 1 || i > opt.dim || j < 1 || j > opt.dim)
            throw dsl::EvalError("derivative axes must lie in 1.." + std::to_string(opt.dim));
        return {{i, j}};
    }
    return {{1, 1}, {1, 2}};
}

std::string ij_label(int i, int j) { return "i=" + std::to_string(i) + ", j=" + std::to_string(j); }

int require_dim3(const PaperOptions& opt, const std::string& name) {
    if (opt.dim != 3) {
        std::cerr << "error: '" << name << "' is a fixed identity in dim 3 (got --dim " << opt.dim << ")\n";
        return kExitEval;
    }
    return kExitOk;
}

std::string coeff_report(const ScalarCoeff& c, int dim) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", c.evaluate(dim));
    return dsl::render(dsl::Value(c), Format::Plain) + "  (= " + buf + ")";
}

int cmd_paper(const std::string& name, const PaperOptions& opt) {
    const Format format = opt.format;
    if (name == "frahm" || name == "pd9" || name == "h6" || name == "h7") {
        if (int rc = require_dim3(opt, name); rc != kExitOk) return rc;
        if (name == "frahm") {
            print_header("frahm: distributional second derivative of 1/r in R^3", format);
            print_header(format == Format::Latex
                             ? "  general: \\mathrm{p.v.}\\left(\\frac{3x_ix_j - "
                               "r^2\\delta_{ij}}{r^5}\\right) - \\frac{1}{3}C\\,\\delta_{ij}\\,\\delta(\\mathbf{x})"
                             : "  general: pv((3*x_i*x_j - r^2*d_ij)/r^5) - (1/3)*C*d_ij*delta   [C = 4*pi]",
                         format);
            for (auto [i, j] : index_pairs(opt)) print_value(dsl::Value(frahm(i, j)), ij_label(i, j), format);
            return kExitOk;
        }
        if (name == "pd9") {
            print_header("pd9: thick second derivative of Pf(1/r) in R^3", format);
            print_header("  general: Pf((3*x_i*x_j - r^2*d_ij)/r^5) + C*(d_ij - 4*n_i*n_j)*delta*", format);
            for (auto [i, j] : index_pairs(opt))
                print_value(dsl::Value(inverse_r_second_thick(i, j)), ij_label(i, j), format);
            return kExitOk;
        }
        if (name == "h6") {
            print_header("h6: order-0 restriction of the thick second derivative of 1/r", format);
            print_header("  general: Pf((3*x_i*x_j - r^2*d_ij)/r^5) + C*(d_ij - 4*n_i*n_j)*delta*", format);
            for (auto [i, j] : index_pairs(opt))
                print_value(dsl::Value(inverse_r_order0_projected(i, j)), ij_label(i, j), format);
            return kExitOk;
        }
        print_header("h7: composition of two order-0 derivatives of 1/r", format);
        print_header("  general: Pf((3*x_i*x_j - r^2*d_ij)/r^5) - C*n_i*n_j*delta*", format);
        for (auto [i, j] : index_pairs(opt))
            print_value(dsl::Value(inverse_r_order0_composed(i, j)), ij_label(i, j), format);
        return kExitOk;
    }
    if (name == "h4") {
        print_header("h4: thick second derivative of Pf(1) in R^" + std::to_string(opt.dim), format);
        print_header("  general: C*(d_ij - 2*n_i*n_j)*delta*[2-n]   [n = " + std::to_string(opt.dim) + "]",
                     format);
        for (auto [i, j] : index_pairs(opt)) {
            if (i > opt.dim || j > opt.dim) {
                std::cerr << "error: axis out of range for dim " << opt.dim << "\n";
                return kExitEval;
            }
            print_value(dsl::Value(pf_one_second_thick(opt.dim, i, j)), ij_label(i, j), format);
        }
        return kExitOk;
    }
    if (name == "bowen" || name == "bowen-naive") {
        if (int rc = require_dim3(opt, name); rc != kExitOk) return rc;
        std::vector<int> indices = opt.indices.empty() ? std::vector<int>{1, 1, 2} : opt.indices;
        const int i = opt.i == 0 ? 2 : opt.i;
        for (int j : indices)
            if (j < 1 || j > 3) {
                std::cerr << "error: --indices entries must lie in 1..3\n";
                return kExitEval;
            }
        if (i < 1 || i > 3) {
            std::cerr << "error: --i must lie in 1..3\n";
            return kExitEval;
        }
        std::ostringstream idx;
        for (size_t k = 0; k < indices.size(); ++k) idx << (k ? "," : "") << indices[k];
        if (name == "bowen") {
            print_header("bowen: derivative of the point-source field n_j1...n_jk/r^2 in R^3", format);
            print_header("  indices (" + idx.str() + "), i=" + std::to_string(i), format);
            const StandardDistribution d = bowen_derivative(indices, i);
            print_value(dsl::Value(d), "result", format);
            if (format != Format::Tree)
                std::cout << "  delta coefficient: " << coeff_report(d.dirac_coefficient(), 3) << "\n";
            return kExitOk;
        }
        if (indices.size() != 3) {
            std::cerr << "error: bowen-naive needs exactly three indices\n";
            return kExitEval;
        }
        print_header("bowen-naive: projected product rule with averaged source term", format);
        print_header("  indices (" + idx.str() + "), i=" + std::to_string(i), format);
        const StandardDistribution naive = bowen_naive(indices[0], indices[1], indices[2], i);
        const StandardDistribution correct = bowen_derivative(indices, i);
        print_value(dsl::Value(naive), "result", format);
        if (format != Format::Tree) {
            std::cout << "  naive delta coefficient:   " << coeff_report(naive.dirac_coefficient(), 3)
                      << "  [WRONG]\n";
            std::cout << "  correct delta coefficient: " << coeff_report(correct.dirac_coefficient(), 3)
                      << "\n";
        }
        return kExitOk;
    }
    std::cerr << "error: unknown paper identity '" << name
              << "' (known: bowen, bowen-naive, frahm, pd9, h6, h7, h4)\n";
    return kExitUsage;
}

// ---- check ----------------------------------------------------------------

struct CheckClass {
    std::string label;
    ProbeReport report;
    double tolerance;
};

std::string report_line(const CheckClass& c) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-42s %4d/%-4d within %.2g, max error %.3g", c.label.c_str(),
                  c.report.passed, c.report.total, c.tolerance, c.report.max_error);
    return buf;
}

int cmd_check(std::uint64_t seed, double tolerance, int probes, Format format) {
    std::vector<CheckClass> classes;
    classes.push_back({"radial finite parts vs Gamma((s+1)/2)/2:", radial_table_check(10, 1e-12), 1e-12});
    for (int dim = 2; dim <= 4; ++dim)
        classes.push_back({"sphere moments |a|<=8, dim " + std::to_string(dim) + ":",
                           sphere_moment_check(dim, 8, 1e-9), 1e-9});
    int remaining = probes;
    for (int dim = 2; dim <= 4; ++dim) {
        const int count = dim == 4 ? remaining : probes / 3;
        remaining -= count;
        classes.push_back({"duality probes, dim " + std::to_string(dim) + ":",
                           duality_probe_sweep(seed + static_cast<std::uint64_t>(dim), dim, count, tolerance),
                           tolerance});
    }

    bool ok = true;
    for (const CheckClass& c : classes) ok = ok && c.report.ok();

    if (format == Format::Tree) {
        nlohmann::json lines = nlohmann::json::array();
        for (const CheckClass& c : classes)
            lines.push_back({{"kind", "probe-class"},
                             {"payload",
                              {{"label", c.label},
                               {"passed", c.report.passed},
                               {"total", c.report.total},
                               {"tolerance", c.tolerance},
                               {"max_error", c.report.max_error}}}});
        const nlohmann::json out{{"kind", "check-report"},
                                 {"payload", {{"seed", seed}, {"ok", ok}}},
                                 {"children", lines}};
        std::cout << out.dump() << "\n";
    } else {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2g", tolerance);
        std::cout << "oracle suite: seed " << seed << ", duality tolerance " << buf << "\n";
        for (const CheckClass& c : classes) std::cout << report_line(c) << "\n";
        std::cout << (ok ? "all checks passed" : "CHECK FAILED") << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thickcalc — exact calculus of distributions with a thick point at the origin"};
    app.fallthrough();

    int dim = 3;
    std::string format_name = "plain";
    double tolerance = 1e-8;
    std::uint64_t seed = 7;
    std::string batch_path;
    app.add_option("--dim", dim, "ambient dimension (>= 2)")->check(CLI::Range(2, 16));
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"plain", "latex", "tree"}));
    app.add_option("--tolerance", tolerance, "oracle tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--batch", batch_path, "evaluate expressions from a file, one per line");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    std::string expression;
    eval_cmd->add_option("expression", expression, "expression text");

    auto* paper_cmd = app.add_subcommand("paper", "print a named classical identity");
    std::string paper_name;
    PaperOptions popt;
    paper_cmd->add_option("name", paper_name, "bowen|bowen-naive|frahm|pd9|h6|h7|h4")->required();
    paper_cmd->add_option("--indices", popt.indices, "point-source factor indices")->delimiter(',');
    paper_cmd->add_option("--i", popt.i, "first derivative axis");
    paper_cmd->add_option("--j", popt.j, "second derivative axis");

    auto* check_cmd = app.add_subcommand("check", "run the numerical oracle suite");
    int probes = 200;
    check_cmd->add_option("--probes", probes, "number of duality probes")->check(CLI::PositiveNumber);

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Format format = parse_format(format_name);
    try {
        if (eval_cmd->parsed()) {
            if (expression.empty() && batch_path.empty()) {
                std::cerr << "error: eval needs an expression or --batch FILE\n";
                return kExitUsage;
            }
            return cmd_eval(expression, batch_path, dim, format);
        }
        if (paper_cmd->parsed()) {
            popt.dim = dim;
            popt.format = format;
            return cmd_paper(paper_name, popt);
        }
        return cmd_check(seed, tolerance, probes, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
}
