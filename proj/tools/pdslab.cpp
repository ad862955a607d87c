// Command-line surface: construct candidate sets, verify them by two exact
// methods, reproduce coverage tables and quadric intersection profiles, and
// export Cayley graphs for external tooling.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 degenerate input,
// 3 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdslab/candidate.hpp"
#include "pdslab/cayley_graph.hpp"
#include "pdslab/coverage.hpp"
#include "pdslab/graph_io.hpp"
#include "pdslab/parallel.hpp"
#include "pdslab/projective.hpp"
#include "pdslab/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 3;

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitUsage;
    }
    out << text;
    return kExitPass;
}

std::string params_string(const pdslab::PdsParams& p) {
    std::ostringstream os;
    os << "(" << p.v << ", " << p.k << ", " << p.lambda << ", " << p.mu << ")";
    return os.str();
}

struct ConstructArgs {
    int ell = 2, j = 1, k = 1;
    int threads = 0;
    bool allow_large = false;
    std::string out_path;
};

int run_construct(const ConstructArgs& a) {
    if (a.k > a.j) {
        std::cerr << "error: need k <= j (the lifted coordinate pairs must lie in the "
                     "elliptic block)\n";
        return kExitUsage;
    }
    if (a.ell == 4 && !a.allow_large) {
        std::cerr << "error: ell = 4 builds a 65536-element group; pass --allow-large\n";
        return kExitUsage;
    }
    const pdslab::PdsCandidate c = pdslab::build_candidate(a.ell, a.j, a.k, a.threads);
    std::cerr << "D(ell=" << a.ell << ", j=" << a.j << ", k=" << a.k << "): "
              << c.elements.size() << " elements in " << "Z4^" << 2 * a.k << " x Z2^"
              << 4 * (a.ell - a.k) << "\n"
              << "expected (v, k, lambda, mu) = " << params_string(c.expected)
              << ", epsilon = " << c.epsilon
              << (c.epsilon < 0 ? " (negative Latin square type)" : " (Latin square type)")
              << "\n";
    if (c.degenerate())
        std::cerr << "warning: degenerate candidate (empty set, the parameter formula "
                     "gives k = 0)\n";
    const int rc = emit(pdslab::canonical_json(c), a.out_path);
    if (rc != kExitPass) return rc;
    return c.degenerate() ? kExitDegenerate : kExitPass;
}

struct VerifyArgs {
    std::string in_path;
    std::string method = "auto";
    std::string out_path;
    int threads = 0;
    bool allow_large = false;
};

int run_verify(const VerifyArgs& a) {
    pdslab::PdsCandidate c;
    try {
        c = pdslab::load_candidate(a.in_path);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << a.in_path << " is not valid JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pdslab::ValidationError& e) {
        std::cerr << "verification failure: structural invariant violated: " << e.what() << "\n";
        return kExitFail;
    }

    std::string method = a.method;
    if (c.shape.ell >= 4) {
        if (!a.allow_large) {
            std::cerr << "error: ell = 4 input; pass --allow-large\n";
            return kExitUsage;
        }
        if (method == "auto") method = "spectral";
        if (method != "spectral") {
            std::cerr << "error: brute-force verification is refused at ell = 4; "
                         "use --method spectral\n";
            return kExitUsage;
        }
    } else if (method == "auto") {
        method = "both";
    }

    pdslab::VerifyOutcome outcome;
    try {
        if (method == "brute")
            outcome = pdslab::brute_force_verify(c, a.threads);
        else if (method == "spectral")
            outcome = pdslab::spectral_verify(c, a.threads);
        else if (method == "both")
            outcome = pdslab::verify_both(c, a.threads);
        else {
            std::cerr << "error: unknown method " << method << "\n";
            return kExitUsage;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitFail;
    }

    switch (outcome.status) {
        case pdslab::VerifyStatus::pass:
            std::cerr << "PASS " << params_string(outcome.certificate.params) << " via";
            for (const auto m : outcome.certificate.methods_passed)
                std::cerr << " " << pdslab::to_string(m);
            std::cerr << "\n";
            break;
        case pdslab::VerifyStatus::degenerate:
            std::cerr << "DEGENERATE: " << outcome.message << "\n";
            break;
        case pdslab::VerifyStatus::fail:
            std::cerr << "FAIL: " << outcome.message << "\n";
            break;
    }
    const int rc = emit(pdslab::certificate_json(outcome), a.out_path);
    if (rc != kExitPass) return rc;
    if (outcome.status == pdslab::VerifyStatus::pass) return kExitPass;
    if (outcome.status == pdslab::VerifyStatus::degenerate) return kExitDegenerate;
    return kExitFail;
}

struct TableArgs {
    int max_ell = 3;
    bool csv = false;
    std::string out_path;
};

int run_table(const TableArgs& a) {
    const auto rows = pdslab::coverage_table(a.max_ell);
    return emit(a.csv ? pdslab::format_coverage_csv(rows) : pdslab::format_coverage_text(rows),
                a.out_path);
}

struct ProfileArgs {
    int ell = 2, j = 1;
    bool restrict_x1 = false;
    std::string out_path;
};

int run_profile(const ProfileArgs& a) {
    if (a.j > a.ell) {
        std::cerr << "error: need j <= ell\n";
        return kExitUsage;
    }
    const pdslab::QuadraticForm form(a.ell, a.j);
    std::vector<pdslab::FieldVector> points;
    pdslab::IntersectionProfile predicted;
    int ambient = 0;
    std::string label;
    if (a.restrict_x1) {
        points = pdslab::quadric_section_points(form);
        ambient = form.dimension() - 1;
        predicted = pdslab::parabolic_quadric_profile(a.ell);
        label = "parabolic section x1 = 0";
    } else {
        points = pdslab::quadric_points(form);
        ambient = form.dimension();
        const bool elliptic = form.type() == pdslab::QuadraticForm::Type::elliptic;
        predicted = elliptic ? pdslab::elliptic_quadric_profile(a.ell)
                             : pdslab::hyperbolic_quadric_profile(a.ell);
        label = elliptic ? "elliptic quadric" : "hyperbolic quadric";
    }
    const pdslab::IntersectionProfile observed = pdslab::hyperplane_profile(points, ambient);

    std::ostringstream os;
    os << label << " of the (ell=" << a.ell << ", j=" << a.j << ") form in PG(" << ambient - 1
       << ",4): " << points.size() << " points, " << ((1ull << (2 * ambient)) - 1) / 3
       << " hyperplanes\n";
    os << "size observed predicted\n";
    for (const auto& [size, mult] : observed) {
        os << size << " " << mult << " ";
        const auto it = predicted.find(size);
        os << (it == predicted.end() ? 0 : it->second) << "\n";
    }
    for (const auto& [size, mult] : predicted)
        if (!observed.contains(size)) os << size << " 0 " << mult << "\n";
    const bool ok = observed == predicted;
    os << (ok ? "PASS" : "FAIL") << "\n";
    const int rc = emit(os.str(), a.out_path);
    if (rc != kExitPass) return rc;
    return ok ? kExitPass : kExitFail;
}

struct ExportArgs {
    std::string in_path;
    std::string format = "graph6";
    std::string out_path;
    int threads = 0;
    bool force = false;
    bool allow_large = false;
};

int run_export(const ExportArgs& a) {
    pdslab::PdsCandidate c;
    try {
        c = pdslab::load_candidate(a.in_path);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << a.in_path << " is not valid JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pdslab::ValidationError& e) {
        std::cerr << "verification failure: structural invariant violated: " << e.what() << "\n";
        return kExitFail;
    }
    if (c.shape.ell >= 4 && !a.allow_large) {
        std::cerr << "error: ell = 4 input; pass --allow-large\n";
        return kExitUsage;
    }
    if (c.degenerate()) {
        std::cerr << "error: degenerate candidate has no Cayley graph\n";
        return kExitDegenerate;
    }
    pdslab::GraphFormat format;
    try {
        format = pdslab::parse_graph_format(a.format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!a.force) {
        const auto outcome = pdslab::spectral_verify(c, a.threads);
        if (!outcome.passed()) {
            std::cerr << "FAIL: refusing to export an unverified candidate: " << outcome.message
                      << " (use --force to override)\n";
            return kExitFail;
        }
    }
    const pdslab::CayleyGraph graph(c);
    if (a.out_path.empty()) {
        pdslab::export_graph(std::cout, graph, format);
    } else {
        std::ofstream out(a.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << a.out_path << " for writing\n";
            return kExitUsage;
        }
        pdslab::export_graph(out, graph, format);
    }
    std::cerr << "exported " << graph.order() << " vertices, " << graph.edge_count()
              << " edges as " << a.format << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and exact verification of partial difference sets in "
                 "Z4^{2k} x Z2^{4l-4k}"};
    app.require_subcommand(1);
    const int default_threads = pdslab::default_thread_count();

    ConstructArgs ca;
    ca.threads = default_threads;
    auto* construct = app.add_subcommand("construct", "build a candidate set and write its JSON");
    construct->add_option("--ell", ca.ell, "half the F4 dimension")->required()
        ->check(CLI::Range(1, 4));
    construct->add_option("--j", ca.j, "number of elliptic blocks")->required()
        ->check(CLI::Range(0, 4));
    construct->add_option("--k", ca.k, "number of Galois-ring coordinates")->required()
        ->check(CLI::Range(0, 4));
    construct->add_option("--out", ca.out_path, "output path (stdout when omitted)");
    construct->add_flag("--allow-large", ca.allow_large, "permit ell = 4 (order 65536)");
    construct->add_option("--threads", ca.threads, "worker count");

    VerifyArgs va;
    va.threads = default_threads;
    auto* verify = app.add_subcommand("verify", "verify a candidate file and emit a certificate");
    verify->add_option("--in", va.in_path, "candidate JSON")->required();
    verify->add_option("--method", va.method, "brute, spectral or both (default: both, "
                                              "spectral at ell = 4)")
        ->check(CLI::IsMember({"auto", "brute", "spectral", "both"}));
    verify->add_option("--out", va.out_path, "certificate path (stdout when omitted)");
    verify->add_flag("--allow-large", va.allow_large, "permit ell = 4 inputs");
    verify->add_option("--threads", va.threads, "worker count");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "coverage table of available constructions");
    table->add_option("--max-ell", ta.max_ell, "largest ell row")->check(CLI::Range(1, 4));
    table->add_flag("--csv", ta.csv, "CSV instead of aligned text");
    table->add_option("--out", ta.out_path, "output path (stdout when omitted)");

    ProfileArgs pa;
    auto* profile = app.add_subcommand("profile",
                                       "hyperplane intersection profile of the quadric");
    profile->add_option("--ell", pa.ell, "half the F4 dimension")->required()
        ->check(CLI::Range(2, 3));
    profile->add_option("--j", pa.j, "number of elliptic blocks")->required()
        ->check(CLI::Range(0, 3));
    profile->add_flag("--restrict-x1", pa.restrict_x1,
                      "profile the parabolic x1 = 0 section instead");
    profile->add_option("--out", pa.out_path, "output path (stdout when omitted)");

    ExportArgs ea;
    ea.threads = default_threads;
    auto* exp = app.add_subcommand("export-graph", "export the Cayley graph of a candidate");
    exp->add_option("--in", ea.in_path, "candidate JSON")->required();
    exp->add_option("--format", ea.format, "graph6, dimacs or edges")->required();
    exp->add_option("--out", ea.out_path, "output path (stdout when omitted)");
    exp->add_flag("--force", ea.force, "skip the verification gate");
    exp->add_flag("--allow-large", ea.allow_large, "permit ell = 4 inputs");
    exp->add_option("--threads", ea.threads, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return run_construct(ca);
        if (verify->parsed()) return run_verify(va);
        if (table->parsed()) return run_table(ta);
        if (profile->parsed()) return run_profile(pa);
        if (exp->parsed()) return run_export(ea);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
