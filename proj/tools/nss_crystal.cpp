// nss-crystal: explore NSS crystal graphs, evaluate data, run the checks.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nss/crystal_graph.hpp"
#include "nss/json_io.hpp"
#include "nss/kernels.hpp"
#include "nss/mvoracle.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int rank = 2;
    int depth = 0;
    int max_boxes = -1;
    std::string mode = "symbolic";
    std::optional<std::uint64_t> seed;
    std::string output;
    std::string format = "json";
    int threads = 0;
    std::string word;
    std::string diagram_file;
    std::string graph_file;
    std::string beta;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    return out;
}

std::vector<int> parse_word(const RunConfig& cfg) {
    auto w = parse_int_list(cfg.word, "word");
    for (int i : w)
        if (i < 0 || i >= cfg.rank) throw UsageError("word letter " + std::to_string(i) + " is not a residue mod " + std::to_string(cfg.rank));
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write " + cfg.output);
}

nss::Specialization specialization(const RunConfig& cfg) {
    if (cfg.mode == "random") return nss::Specialization::random(*cfg.seed);
    return nss::Specialization::symbolic();
}

nss::NssDatum datum_for(const nss::CartanData& cartan, const std::vector<int>& word) {
    auto m = nss::NssDatum::zero(cartan);
    for (int i : word) m = m.apply_fhat(i);
    return m;
}

int cmd_explore(const RunConfig& cfg) {
    nss::CartanData cartan(cfg.rank);
    nss::ExploreOptions opts;
    opts.max_boxes = cfg.max_boxes;
    auto g = nss::explore(cartan, cfg.depth, opts);
    auto fmt = cfg.format == "dot" ? nss::ExportFormat::Dot : nss::ExportFormat::Json;
    write_output(cfg, nss::export_graph(g, fmt));
    if (!cfg.output.empty() && cfg.output != "-") std::cerr << g.size() << " nodes written to " << cfg.output << "\n";
    return kExitPass;
}

int cmd_eval(const RunConfig& cfg) {
    nss::CartanData cartan(cfg.rank);
    auto word = parse_word(cfg);
    nss::MayaDiagram gamma;
    try {
        auto j = nss::Json::parse(read_file(cfg.diagram_file));
        gamma = j.contains("parts") ? nss::from_partition(nss::partition_from_json(j)) : nss::maya_from_json(j);
    } catch (const nss::Json::exception& e) {
        throw UsageError(std::string("malformed diagram JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid diagram: ") + e.what());
    }
    if (gamma.kind() != nss::Kind::LeftBlack) throw UsageError("eval needs a left-black diagram");
    std::cout << datum_for(cartan, word).eval(gamma) << "\n";
    return kExitPass;
}

// Every beta >= 0 with height <= max_height, so missing weights are noticed.
void all_betas(int n, int max_height, std::vector<int>& cur, std::vector<nss::RootVector>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back({cur});
        return;
    }
    int used = 0;
    for (int c : cur) used += c;
    for (int c = 0; used + c <= max_height; ++c) {
        cur.push_back(c);
        all_betas(n, max_height, cur, out);
        cur.pop_back();
    }
}

std::string root_string(const nss::RootVector& b) {
    std::string s = "(";
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) s += (k ? "," : "") + std::to_string(b.coeffs[k]);
    return s + ")";
}

int cmd_verify(const RunConfig& cfg) {
    std::optional<nss::CrystalGraph> g;
    if (!cfg.graph_file.empty()) {
        try {
            g = nss::import_graph_json(read_file(cfg.graph_file));
        } catch (const std::runtime_error& e) {
            if (dynamic_cast<const UsageError*>(&e)) throw;
            std::cerr << "graph file rejected: " << e.what() << "\n";
            return kExitFail;
        }
    } else {
        nss::ExploreOptions opts;
        opts.max_boxes = cfg.max_boxes;
        g = nss::explore(nss::CartanData(cfg.rank), cfg.depth, opts);
    }

    bool ok = true;
    auto violations = nss::check_axioms(*g);
    for (const auto& v : violations)
        std::cout << "axiom " << v.axiom << " violated at node " << v.node << " residue " << v.residue << ": " << v.message << "\n";
    ok = ok && violations.empty();

    auto census = nss::weight_census(*g);
    std::vector<nss::RootVector> betas;
    std::vector<int> cur;
    all_betas(g->rank(), g->depth(), cur, betas);
    std::sort(betas.begin(), betas.end(), [](const auto& a, const auto& b) {
        return a.height() != b.height() ? a.height() < b.height() : a < b;
    });
    std::cout << "beta\theight\tnodes\tkostant\tstatus\n";
    for (const auto& b : betas) {
        auto it = census.find(b);
        std::uint64_t have = it == census.end() ? 0 : it->second;
        std::uint64_t want = nss::kostant(g->cartan(), b);
        bool good = have == want;
        ok = ok && good;
        std::cout << root_string(b) << "\t" << b.height() << "\t" << have << "\t" << want << "\t" << (good ? "ok" : "MISMATCH")
                  << "\n";
    }
    for (const auto& [b, count] : census)
        if (b.height() > g->depth() || !b.nonnegative()) {
            ok = false;
            std::cout << root_string(b) << "\t" << b.height() << "\t" << count << "\t-\tOUT OF RANGE\n";
        }
    std::cout << (ok ? "PASS" : "FAIL") << ": " << g->size() << " nodes, " << violations.size() << " axiom violations\n";
    return ok ? kExitPass : kExitFail;
}

int cmd_oracle_check(const RunConfig& cfg) {
    nss::CartanData cartan(cfg.rank);
    auto m = datum_for(cartan, parse_word(cfg));
    int max_boxes = cfg.max_boxes < 0 ? 6 : cfg.max_boxes;
    auto report = nss::compare(m, nss::sigma_canonical_diagrams(cfg.rank, max_boxes), specialization(cfg));
    if (!cfg.output.empty()) write_output(cfg, nss::report_json(report));
    if (!report.pass) {
        std::cout << "diagram\tnss\toracle\n";
        for (const auto& r : report.results)
            if (!r.ok) std::cout << nss::to_string(r.diagram) << "\t" << r.nss_value << "\t" << r.oracle_value << "\n";
    }
    std::cout << (report.pass ? "PASS" : "FAIL") << ": " << report.results.size() - report.mismatches() << "/"
              << report.results.size() << " diagrams agree\n";
    return report.pass ? kExitPass : kExitFail;
}

int cmd_kostant(const RunConfig& cfg) {
    nss::CartanData cartan(cfg.rank);
    nss::RootVector beta{parse_int_list(cfg.beta, "beta")};
    if (static_cast<int>(beta.coeffs.size()) != cfg.rank) throw UsageError("beta needs one coefficient per simple root");
    if (!beta.nonnegative()) throw UsageError("beta must be nonnegative");
    std::cout << nss::kostant(cartan, beta) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explore and verify NSS crystals of affine type A"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_rank = [&](CLI::App* sub) {
        sub->add_option("--rank,-n", cfg.rank, "n for A^(1)_{n-1}")->required()->check(CLI::Range(2, 64));
        sub->add_option("--threads", cfg.threads, "worker cap for the parallel kernels")->check(CLI::NonNegativeNumber);
    };
    auto add_depth = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--depth,-d", cfg.depth, "BFS depth")->check(CLI::NonNegativeNumber);
        if (required) o->required();
        sub->add_option("--max-boxes", cfg.max_boxes, "fingerprint bound (default n*(depth+1))")
            ->check(CLI::NonNegativeNumber);
    };

    auto* explore = app.add_subcommand("explore", "BFS the crystal graph and export it");
    add_rank(explore);
    add_depth(explore, true);
    explore->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json"}));
    explore->add_option("--output,-o", cfg.output, "output file (default stdout)");

    auto* eval = app.add_subcommand("eval", "print M_gamma for the datum of a word");
    add_rank(eval);
    eval->add_option("--word,-w", cfg.word, "comma separated residues, e.g. 0,1")->expected(0, 1);
    eval->add_option("--diagram", cfg.diagram_file, "diagram JSON file")->required();

    auto* verify = app.add_subcommand("verify", "crystal axioms and weight census against Kostant");
    verify->add_option("--rank,-n", cfg.rank)->check(CLI::Range(2, 64));
    verify->add_option("--threads", cfg.threads)->check(CLI::NonNegativeNumber);
    add_depth(verify, false);
    verify->add_option("--graph", cfg.graph_file, "verify a JSON graph export instead of exploring");

    auto* oracle = app.add_subcommand("oracle-check", "compare the datum with the generic-point valuation");
    add_rank(oracle);
    oracle->add_option("--word,-w", cfg.word, "comma separated residues; empty for the zero datum")->expected(0, 1);
    oracle->add_option("--max-boxes", cfg.max_boxes, "diagram size bound (default 6)")->check(CLI::NonNegativeNumber);
    oracle->add_option("--mode", cfg.mode)->check(CLI::IsMember({"symbolic", "random"}));
    oracle->add_option("--seed", cfg.seed, "required with --mode random");
    oracle->add_option("--output,-o", cfg.output, "write the JSON report here");

    auto* kost = app.add_subcommand("kostant", "Kostant partition function");
    add_rank(kost);
    kost->add_option("--beta", cfg.beta, "coefficients over alpha_0..alpha_{n-1}")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cfg.mode == "random" && !cfg.seed) throw UsageError("--mode random needs --seed");
        if (cfg.mode != "random" && cfg.seed) throw UsageError("--seed is only meaningful with --mode random");
        if (*verify && cfg.graph_file.empty() && verify->count("--depth") == 0)
            throw UsageError("verify needs --depth or --graph");
        if (*verify && cfg.graph_file.empty() && verify->count("--rank") == 0)
            throw UsageError("verify needs --rank or --graph");
        nss::kernels::set_thread_count(cfg.threads);

        if (*explore) return cmd_explore(cfg);
        if (*eval) return cmd_eval(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*oracle) return cmd_oracle_check(cfg);
        if (*kost) return cmd_kostant(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
