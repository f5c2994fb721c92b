#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "projcode/codes.hpp"
#include "projcode/constructions.hpp"
#include "projcode/graphs.hpp"
#include "projcode/verify.hpp"

using namespace projcode;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void print_summary(const VerificationReport& r) {
    std::cout << to_string(r.status) << "  " << r.claim << " " << r.params.dump() << "  (" << r.wall_time << " s)\n";
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    if (r.status == Status::kFail)
        for (const auto& w : r.witnesses) std::cout << "    witness: " << w.dump() << "\n";
}

int cmd_verify(const ClaimRequest& a, const std::string& json_out) {
    std::vector<VerificationReport> reports;
    try {
        reports = run_claim(a);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool failed = false;
    json out = json::array();
    for (const auto& r : reports) {
        print_summary(r);
        failed = failed || r.status == Status::kFail;
        out.push_back(r.to_json());
    }
    if (!json_out.empty()) write_file(json_out, (reports.size() == 1 ? out[0] : out).dump(2) + "\n");
    return failed ? kExitFail : 0;
}

struct GraphArgs {
    std::size_t n = 0, k = 0;
    std::uint32_t q = 0;
    std::string predicate = "projective";
    std::string method = "auto";
    std::string dot_out, json_out;
    std::uint64_t max_vertices = kMaxEnumeration;
};

int cmd_graph(const GraphArgs& a) {
    AdjacencyMethod m = AdjacencyMethod::kAuto;
    if (a.method == "pairwise") m = AdjacencyMethod::kPairwise;
    else if (a.method == "generate") m = AdjacencyMethod::kNeighborGeneration;
    else if (a.method != "auto") throw UsageError("unknown method " + a.method);
    CodeGraph g;
    try {
        g = build_graph(a.n, a.k, a.q, parse_predicate(a.predicate), m, a.max_vertices);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::cout << "vertices " << g.size() << "\nedges " << g.edge_count() << "\n";
    const bool connected = is_connected(g);
    std::cout << "connected " << (connected ? "yes" : "no") << "\n";
    if (connected && g.size() > 0 && g.size() <= 5000) std::cout << "diameter " << diameter(g) << "\n";
    if (auto d = regular_degree(g)) std::cout << "regular degree " << *d << "\n";
    if (!a.dot_out.empty()) write_file(a.dot_out, to_dot(g));
    if (!a.json_out.empty()) write_file(a.json_out, to_json(g).dump(2) + "\n");
    return 0;
}

int cmd_construct(const std::string& name, const std::vector<std::uint64_t>& p, bool candidates) {
    auto print_pair = [](const ConstructionPair& c) {
        std::cout << "# " << to_string(c.provenance) << " n=" << c.n << " k=" << c.k << " q=" << c.q
                  << " meet=" << c.expected_meet;
        if (c.lambda) std::cout << " a=" << c.a << " lambda=" << c.lambda;
        std::cout << "\n# X\n" << to_text(c.x_generator) << "\n# Y\n" << to_text(c.y_generator);
    };
    try {
        if (name == "simplex") {
            if (p.size() != 2) throw UsageError("simplex takes k q");
            std::cout << to_text(simplex_generator_matrix(Field::of_order(static_cast<std::uint32_t>(p[1])), p[0]));
        } else if (name == "lemma14" || name == "remark1" || name == "pair") {
            if (p.size() != 3) throw UsageError(name + " takes n k q");
            const Field& f = Field::of_order(static_cast<std::uint32_t>(p[2]));
            if (name == "lemma14") print_pair(lemma14_pair(p[0], p[1], f));
            else if (name == "remark1") print_pair(remark1_pair(p[0], p[1], f));
            else print_pair(construction_pair(p[0], p[1], f));
        } else if (name == "binary-15-4") {
            print_pair(fixture_binary_15_4());
        } else if (name == "ternary-13-3") {
            auto fx = fixture_ternary_13_3();
            print_pair(fx.pair);
            if (candidates)
                for (std::size_t i = 0; i < fx.candidates.size(); ++i)
                    std::cout << "\n# candidate " << i << "\n" << to_text(fx.candidates[i]);
        } else {
            throw UsageError("unknown construction " + name);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return 0;
}

int cmd_profile(const std::string& path, const std::string& json_out) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    Matrix m = [&] {
        try {
            return parse_matrix(in);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    const Subspace c = canonicalize(m);
    const CodeProfile p = profile(c);
    std::cout << "n " << p.n << "\nk " << p.k << "\nq " << p.q << "\nnondegenerate " << p.nondegenerate
              << "\nprojective " << p.projective << "\nsimplex " << p.simplex << "\nweights";
    json wd = json::object();
    for (auto [w, count] : p.weight_distribution) {
        std::cout << " " << w << ":" << count;
        wd[std::to_string(w)] = count;
    }
    std::cout << "\n";
    if (!json_out.empty()) {
        json j = {{"n", p.n},           {"k", p.k},
                  {"q", p.q},           {"nondegenerate", p.nondegenerate},
                  {"projective", p.projective}, {"simplex", p.simplex},
                  {"weight_distribution", wd}, {"canonical_basis", basis_label(c)}};
        write_file(json_out, j.dump(2) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective codes: constructions, code graphs and claim verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    ClaimRequest va;
    std::string verify_json;
    auto* verify = app.add_subcommand("verify", "Run a named check and report pass/fail");
    verify->add_option("claim", va.claim,
                       "theorem1 | theorem2 | corollary1 | corollary2 | lemma11 | lemma12 | lemma13 | "
                       "counterexample | cex-binary | cex-ternary | constructions | grassmann-formula | "
                       "cross-validation | all")
        ->required();
    verify->add_option("params", va.params, "numeric parameters of the claim");
    verify->add_option("--json", verify_json, "write the report(s) as JSON");
    verify->add_option("--seed", va.seed, "seed for sampled checks");
    verify->add_option("--max-vertices", va.guards.max_vertices, "enumeration guard on the Gaussian binomial");
    verify->add_option("--max-scan", va.guards.max_scan, "guard on q^n for exhaustive scans");
    verify->add_option("--variant", va.variant, "corollary2: standard | shuffled | mutated");
    verify->add_option("--profile", va.profile, "all: parameter profile (desk)");
    verify->add_option("--fixture", va.fixture, "counterexample: binary-15-4 | ternary-13-3");
    verify->add_option("--trials", va.trials, "lemma11/12/13: number of sampled instances");
    verify->add_option("--dim-u", va.dim_u, "lemma12: dimension of U");
    verify->add_option("--max-n", va.max_n, "constructions: largest n in the sweep");

    GraphArgs ga;
    auto* graph = app.add_subcommand("graph", "Code graphs");
    graph->require_subcommand(1);
    auto* build = graph->add_subcommand("build", "Build the graph of k-subspaces of F_q^n passing a predicate");
    build->add_option("n", ga.n)->required();
    build->add_option("k", ga.k)->required();
    build->add_option("q", ga.q)->required();
    build->add_option("--predicate", ga.predicate, "all | projective | simplex");
    build->add_option("--method", ga.method, "auto | pairwise | generate");
    build->add_option("--dot", ga.dot_out, "write Graphviz DOT");
    build->add_option("--json", ga.json_out, "write JSON adjacency");
    build->add_option("--max-vertices", ga.max_vertices, "enumeration guard on the Gaussian binomial");

    std::string cname;
    std::vector<std::uint64_t> cparams;
    bool with_candidates = false;
    auto* construct = app.add_subcommand("construct", "Print generator matrices in the text matrix format");
    construct->add_option("name", cname, "simplex | lemma14 | remark1 | pair | binary-15-4 | ternary-13-3")
        ->required();
    construct->add_option("params", cparams, "numeric parameters");
    construct->add_flag("--candidates", with_candidates, "ternary-13-3: also print the 16 candidates");

    std::string matrix_file, profile_json;
    auto* code = app.add_subcommand("code", "Code utilities");
    code->require_subcommand(1);
    auto* prof = code->add_subcommand("profile", "Projectivity, simplex test and weight distribution");
    prof->add_option("matrix-file", matrix_file)->required();
    prof->add_option("--json", profile_json, "write the profile as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(va, verify_json);
        if (*build) return cmd_graph(ga);
        if (*construct) return cmd_construct(cname, cparams, with_candidates);
        if (*prof) return cmd_profile(matrix_file, profile_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << " (raise --max-vertices to override)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
