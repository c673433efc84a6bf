// graph-mpinv: exact Moore-Penrose inverses of the incidence matrix M, the
// signless Laplacian Q = MM', and the edge version S = M'M, for trees and
// odd unicyclic graphs, plus an elimination-based oracle and a verification
// suite. Exit codes: 0 success, 1 usage/parse/verification failure, 2 valid
// input outside the supported graph classes.

#include <CLI11.hpp>

#include "mpinv/bipartite.hpp"
#include "mpinv/generators.hpp"
#include "mpinv/graph.hpp"
#include "mpinv/linalg.hpp"
#include "mpinv/serialize.hpp"
#include "mpinv/tree_mp.hpp"
#include "mpinv/unicyclic_mp.hpp"
#include "mpinv/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

mpinv::GraphReadResult read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mpinv::parse_error(0, "cannot open '" + path + "'");
    mpinv::GraphReadResult result = mpinv::read_graph(in);
    for (auto [original, assigned] : result.relabeling)
        std::cerr << "# relabeled " << original << " -> " << assigned << "\n";
    return result;
}

int cmd_classify(const std::string& path) {
    const mpinv::Graph g = read_graph_file(path).graph;
    const mpinv::GraphClass cls = mpinv::classify(g);
    switch (cls.kind) {
        case mpinv::GraphKind::Tree:
            std::cout << "tree n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
            return 0;
        case mpinv::GraphKind::OddUnicyclic:
            std::cout << "odd-unicyclic n=" << g.vertex_count()
                      << " cycle=" << mpinv::find_cycle(g).vertices.size() << "\n";
            return 0;
        default:
            std::cout << "unsupported n=" << g.vertex_count() << " m=" << g.edge_count()
                      << ": " << cls.detail << "\n";
            return 2;
    }
}

int cmd_compute(const std::string& path, const std::string& which, const std::string& mode,
                const std::string& format) {
    const mpinv::Graph g = read_graph_file(path).graph;
    const mpinv::GraphClass cls = mpinv::classify(g);
    mpinv::RationalMatrix out;
    if (mode == "formula") {
        if (cls.kind == mpinv::GraphKind::Tree) {
            out = which == "M"   ? mpinv::mp_incidence(g)
                  : which == "Q" ? mpinv::mp_signless_laplacian(g)
                                 : mpinv::mp_edge_laplacian(g);
        } else if (cls.kind == mpinv::GraphKind::OddUnicyclic) {
            out = which == "M"   ? mpinv::inv_incidence(g)
                  : which == "Q" ? mpinv::inv_signless_laplacian(g)
                                 : mpinv::inv_edge_laplacian(g);
        } else {
            std::cerr << "error: graph is unsupported (" << cls.detail
                      << "); closed forms cover trees and odd unicyclic graphs"
                      << (cls.detail == "disconnected" ? "" : "; try --mode oracle") << "\n";
            return 2;
        }
    } else {
        if (cls.detail == "disconnected") {
            std::cerr << "error: graph is disconnected\n";
            return 2;
        }
        const mpinv::RationalMatrix inc = mpinv::incidence_matrix(g);
        const mpinv::RationalMatrix base = which == "M" ? inc
                                           : which == "Q"
                                               ? mpinv::matmul(inc, inc.transposed())
                                               : mpinv::matmul(inc.transposed(), inc);
        out = mpinv::pseudoinverse_oracle(base);
    }
    std::cout << (format == "json" ? mpinv::matrix_to_json(out) + "\n"
                                   : mpinv::matrix_to_csv(out));
    return 0;
}

struct GenTokens {
    std::string kind;
    int n = 0;
    int cycle = 0;
    int count = 1;
    std::uint64_t seed = 0;
};

GenTokens parse_gen_tokens(const std::vector<std::string>& tokens, bool allow_count) {
    if (tokens.empty())
        throw std::invalid_argument("expected KIND n=N [cycle=K] [count=C] [seed=S]");
    GenTokens spec;
    spec.kind = tokens[0];
    if (spec.kind != "tree" && spec.kind != "unicyclic")
        throw std::invalid_argument("unknown kind '" + spec.kind +
                                    "' (expected tree or unicyclic)");
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& token = tokens[i];
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        const bool known = key == "n" || key == "cycle" || key == "seed" ||
                           (key == "count" && allow_count);
        if (!known) throw std::invalid_argument("unknown key '" + key + "'");
        try {
            if (key == "n")
                spec.n = std::stoi(value);
            else if (key == "cycle")
                spec.cycle = std::stoi(value);
            else if (key == "count")
                spec.count = std::stoi(value);
            else
                spec.seed = std::stoull(value);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad value in '" + token + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("value out of range in '" + token + "'");
        }
    }
    if (spec.n < 1) throw std::invalid_argument("n must be given and at least 1");
    if (spec.kind == "unicyclic" && spec.cycle == 0)
        throw std::invalid_argument("unicyclic generation needs cycle=K");
    if (spec.count < 1) throw std::invalid_argument("count must be at least 1");
    return spec;
}

mpinv::Graph generate_instance(const GenTokens& spec, std::uint64_t seed) {
    if (spec.kind == "tree") return mpinv::random_tree(spec.n, seed);
    return mpinv::random_odd_unicyclic(spec.n, spec.cycle, seed);
}

int cmd_generate(const std::vector<std::string>& tokens, const std::string& out_path) {
    const GenTokens spec = parse_gen_tokens(tokens, false);
    const mpinv::Graph g = generate_instance(spec, spec.seed);
    const std::string text = mpinv::write_graph(g);
    if (out_path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 1;
    }
    out << text;
    return 0;
}

unsigned worker_count(int instances) {
    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (const char* env = std::getenv("GRAPH_MPINV_THREADS")) {
        try {
            const int parsed = std::stoi(env);
            if (parsed >= 1) threads = static_cast<unsigned>(parsed);
        } catch (const std::exception&) {
            // Unparseable values fall back to the hardware default.
        }
    }
    return std::min<unsigned>(threads, static_cast<unsigned>(std::max(instances, 1)));
}

std::string format_report(const mpinv::VerificationReport& report) {
    std::ostringstream out;
    for (const auto& check : report.checks) {
        if (check.pass)
            out << "PASS " << check.name << "\n";
        else
            out << "FAIL " << check.name << ": " << check.detail << "\n";
    }
    out << "summary: " << report.passed_count() << "/" << report.checks.size()
        << " checks passed\n";
    return out.str();
}

int cmd_verify_file(const std::string& path, bool inject_fault) {
    const mpinv::Graph g = read_graph_file(path).graph;
    const mpinv::VerificationReport report = mpinv::verify_graph(g, inject_fault);
    std::cout << "graph: " << report.graph_summary << "\n" << format_report(report);
    return report.all_pass() ? 0 : 1;
}

int cmd_verify_generated(const std::vector<std::string>& tokens, bool inject_fault) {
    const GenTokens spec = parse_gen_tokens(tokens, true);
    std::vector<std::uint64_t> seeds(spec.count);
    mpinv::SplitMix64 stream(spec.seed);
    for (auto& s : seeds) s = stream.next();

    std::vector<std::string> blocks(spec.count);
    std::vector<char> passed(spec.count, 0);
    std::vector<std::size_t> check_counts(spec.count, 0);
    std::vector<std::size_t> check_passed(spec.count, 0);

    const unsigned threads = worker_count(spec.count);
    auto work = [&](unsigned offset) {
        for (int k = static_cast<int>(offset); k < spec.count;
             k += static_cast<int>(threads)) {
            const mpinv::Graph g = generate_instance(spec, seeds[k]);
            const mpinv::VerificationReport report = mpinv::verify_graph(g, inject_fault);
            std::ostringstream out;
            out << "instance " << k + 1 << "/" << spec.count << ": " << report.graph_summary
                << " seed=" << seeds[k];
            if (report.all_pass()) {
                out << " -> pass (" << report.checks.size() << " checks)\n";
            } else {
                out << " -> FAIL (" << report.passed_count() << "/" << report.checks.size()
                    << " checks passed)\n";
                for (const auto& check : report.checks)
                    if (!check.pass)
                        out << "  FAIL " << check.name << ": " << check.detail << "\n";
            }
            blocks[k] = out.str();
            passed[k] = report.all_pass() ? 1 : 0;
            check_counts[k] = report.checks.size();
            check_passed[k] = report.passed_count();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& t : pool) t.join();

    std::cout << "gen: " << spec.kind << " n=" << spec.n;
    if (spec.kind == "unicyclic") std::cout << " cycle=" << spec.cycle;
    std::cout << " count=" << spec.count << " seed=" << spec.seed << "\n";
    int instances_passed = 0;
    std::size_t checks_total = 0, checks_ok = 0;
    for (int k = 0; k < spec.count; ++k) {
        std::cout << blocks[k];
        instances_passed += passed[k];
        checks_total += check_counts[k];
        checks_ok += check_passed[k];
    }
    std::cout << "summary: " << instances_passed << "/" << spec.count
              << " instances passed, " << checks_ok << "/" << checks_total
              << " checks passed\n";
    return instances_passed == spec.count ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Moore-Penrose inverses of tree and odd-unicyclic graph matrices"};
    app.require_subcommand(1);

    std::string classify_file;
    CLI::App* classify = app.add_subcommand("classify", "report the class of a graph file");
    classify->add_option("file", classify_file, "graph in text format")->required();

    std::string compute_file, which = "M", mode = "formula", format = "csv";
    CLI::App* compute =
        app.add_subcommand("compute", "print M+, Q+ or S+ (inverses when they exist)");
    compute->add_option("file", compute_file, "graph in text format")->required();
    compute->add_option("--which", which, "matrix to invert: M, Q or S")
        ->required()
        ->check(CLI::IsMember({"M", "Q", "S"}));
    compute->add_option("--mode", mode, "formula (closed form) or oracle (elimination)")
        ->check(CLI::IsMember({"formula", "oracle"}));
    compute->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string verify_file;
    std::vector<std::string> verify_gen;
    bool inject_fault = false;
    CLI::App* verify = app.add_subcommand("verify", "run the consistency suite");
    verify->add_option("file", verify_file, "graph in text format");
    verify->add_option("--gen", verify_gen,
                       "KIND n=N [cycle=K] [count=C] [seed=S] instead of a file")
        ->expected(-1);
    verify->add_flag("--inject-fault", inject_fault)->group("");

    std::vector<std::string> generate_tokens;
    std::string generate_out;
    CLI::App* generate = app.add_subcommand("generate", "write a random graph file");
    generate->add_option("spec", generate_tokens, "KIND n=N [cycle=K] [seed=S]")
        ->expected(-1)
        ->required();
    generate->add_option("-o,--output", generate_out, "output path ('-' for stdout)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(classify_file);
        if (app.got_subcommand(compute)) return cmd_compute(compute_file, which, mode, format);
        if (app.got_subcommand(generate)) return cmd_generate(generate_tokens, generate_out);
        if (verify_file.empty() == verify_gen.empty()) {
            std::cerr << "error: verify needs exactly one of FILE or --gen\n";
            return 1;
        }
        if (!verify_file.empty()) return cmd_verify_file(verify_file, inject_fault);
        return cmd_verify_generated(verify_gen, inject_fault);
    } catch (const mpinv::disconnected_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mpinv::wrong_class_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mpinv::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const mpinv::graph_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
