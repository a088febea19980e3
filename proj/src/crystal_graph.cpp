#include "nss/crystal_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nss/kernels.hpp"

namespace nss {

std::vector<CrystalGraph::Edge> CrystalGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t b = 0; b < f_edges_.size(); ++b)
        for (std::size_t i = 0; i < f_edges_[b].size(); ++i)
            if (f_edges_[b][i] >= 0) out.push_back({static_cast<int>(b), f_edges_[b][i], static_cast<int>(i)});
    return out;
}

int CrystalGraph::add_node(CrystalNode node) {
    node.id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(node));
    f_edges_.emplace_back(static_cast<std::size_t>(rank()), -1);
    return nodes_.back().id;
}

void CrystalGraph::set_edge(int from, int i, int to) {
    f_edges_.at(static_cast<std::size_t>(from)).at(static_cast<std::size_t>(i)) = to;
}

int default_max_boxes(int n, int depth) { return n * (depth + 1); }

namespace {

struct Pending {
    NssDatum datum;
    int level;
    WeightVector weight;
    std::vector<int> fingerprint;
};

using DedupKey = std::pair<std::vector<int>, std::vector<int>>;

}  // namespace

CrystalGraph explore(const CartanData& cartan, int depth, const ExploreOptions& options) {
    if (depth < 0) throw std::invalid_argument("explore: depth must be nonnegative");
    const int n = cartan.rank();
    const int max_boxes = options.max_boxes >= 0 ? options.max_boxes : default_max_boxes(n, depth);
    auto index = DiagramIndex::get(n, max_boxes);

    std::vector<Pending> all;
    std::vector<std::vector<int>> raw_edges;  // indices into `all`
    {
        NssDatum zero = NssDatum::zero(cartan);
        all.push_back({zero, 0, zero.weight(), zero.fingerprint(max_boxes)});
        raw_edges.emplace_back(static_cast<std::size_t>(n), -1);
    }

    std::size_t layer_begin = 0;
    for (int level = 1; level <= depth; ++level) {
        const std::size_t layer_end = all.size();
        const long parents = static_cast<long>(layer_end - layer_begin);
        const long count = parents * n;
        std::vector<std::optional<Pending>> candidates(static_cast<std::size_t>(count));

        // Each candidate fills its own table; parents' tables and memos are
        // shared read-mostly state guarded inside NssDatum.
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel) num_threads(kernels::thread_count())
        for (long c = 0; c < count; ++c) {
            const Pending& parent = all[layer_begin + static_cast<std::size_t>(c / n)];
            NssDatum child = parent.datum.apply_fhat(static_cast<int>(c % n));
            std::vector<int> values = kernels::fingerprint_table_serial(child, *index);
            child.install_table(index, values);
            candidates[static_cast<std::size_t>(c)] = Pending{child, level, child.weight(), std::move(values)};
        }

        std::map<DedupKey, int> seen;
        for (long c = 0; c < count; ++c) {
            Pending& cand = *candidates[static_cast<std::size_t>(c)];
            DedupKey key{cand.weight.coeffs, cand.fingerprint};
            auto [it, inserted] = seen.try_emplace(std::move(key), static_cast<int>(all.size()));
            if (inserted) {
                all.push_back(std::move(cand));
                raw_edges.emplace_back(static_cast<std::size_t>(n), -1);
            }
            raw_edges[layer_begin + static_cast<std::size_t>(c / n)][static_cast<std::size_t>(c % n)] = it->second;
        }
        layer_begin = layer_end;
    }

    std::vector<int> order(all.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Pending& x = all[a];
        const Pending& y = all[b];
        if (x.level != y.level) return x.level < y.level;
        if (x.weight != y.weight) return x.weight.coeffs > y.weight.coeffs;
        return x.fingerprint < y.fingerprint;
    });
    std::vector<int> new_id(all.size());
    for (std::size_t k = 0; k < order.size(); ++k) new_id[order[k]] = static_cast<int>(k);

    std::vector<CrystalNode> nodes(all.size());
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel) num_threads(kernels::thread_count())
    for (long k = 0; k < static_cast<long>(order.size()); ++k) {
        const Pending& p = all[order[k]];
        CrystalNode node;
        node.word = p.datum.word();
        node.weight = p.weight;
        node.eps.resize(n);
        node.phi.resize(n);
        for (int i = 0; i < n; ++i) {
            node.eps[i] = p.datum.eps_hat(i);
            node.phi[i] = p.datum.phi_hat(i);
        }
        node.fingerprint = p.fingerprint;
        node.datum = p.datum;
        nodes[static_cast<std::size_t>(k)] = std::move(node);
    }

    CrystalGraph g(cartan, depth, max_boxes);
    for (auto& node : nodes) g.add_node(std::move(node));
    for (std::size_t old = 0; old < all.size(); ++old)
        for (int i = 0; i < n; ++i)
            if (raw_edges[old][i] >= 0) g.set_edge(new_id[old], i, new_id[raw_edges[old][i]]);
    return g;
}

std::optional<int> e_hat(const CrystalGraph& g, int b, int i) {
    std::optional<int> found;
    for (const auto& node : g.nodes()) {
        if (g.f_edge(node.id, i) != b) continue;
        if (found) throw std::logic_error("e_hat: several f-predecessors; the graph is not a crystal");
        found = node.id;
    }
    return found;
}

std::vector<AxiomViolation> check_axioms(const CrystalGraph& g) {
    const int n = g.rank();
    const CartanData& cartan = g.cartan();
    std::vector<AxiomViolation> out;
    auto report = [&](int b, int i, const char* axiom, std::string msg) {
        out.push_back({b, i, axiom, std::move(msg)});
    };

    // preds[b][i]: every node with an f_i-edge into b.
    std::vector<std::vector<std::vector<int>>> preds(g.size(), std::vector<std::vector<int>>(n));
    for (const auto& e : g.edges()) {
        if (e.to < 0 || e.to >= static_cast<int>(g.size())) {
            report(e.from, e.i, "iv", "edge target out of range");
            continue;
        }
        preds[e.to][e.i].push_back(e.from);
    }

    auto shifted = [&](const WeightVector& w, int i, int by) {
        WeightVector r = w;
        r.coeffs[i] += by;
        return r;
    };

    for (const auto& node : g.nodes()) {
        const int b = node.id;
        if (static_cast<int>(node.weight.coeffs.size()) != n || static_cast<int>(node.eps.size()) != n ||
            static_cast<int>(node.phi.size()) != n) {
            report(b, 0, "i", "statistics have the wrong length");
            continue;
        }
        for (int i = 0; i < n; ++i) {
            if (node.phi[i] != node.eps[i] + pair_with_coroot(cartan, node.weight, i))
                report(b, i, "i", "phi != eps + <wt, alpha_i>");

            const int to = g.f_edge(b, i);
            if (to >= 0 && to < static_cast<int>(g.size())) {
                const CrystalNode& t = g.node(to);
                if (t.weight != shifted(node.weight, i, -1)) report(b, i, "iii", "wt(f_i b) != wt(b) - alpha_i");
                if (t.eps[i] != node.eps[i] + 1) report(b, i, "iii", "eps_i(f_i b) != eps_i(b) + 1");
                if (t.phi[i] != node.phi[i] - 1) report(b, i, "iii", "phi_i(f_i b) != phi_i(b) - 1");
                if (preds[to][i].size() != 1) report(b, i, "iv", "e_i(f_i b) is not unique");
            }

            const auto& p = preds[b][i];
            if (p.size() > 1) {
                report(b, i, "iv", "several f_i-predecessors");
                continue;
            }
            if (p.size() == 1) {
                const CrystalNode& up = g.node(p.front());
                if (up.weight != shifted(node.weight, i, +1)) report(b, i, "ii", "wt(e_i b) != wt(b) + alpha_i");
                if (up.eps[i] != node.eps[i] - 1) report(b, i, "ii", "eps_i(e_i b) != eps_i(b) - 1");
                if (up.phi[i] != node.phi[i] + 1) report(b, i, "ii", "phi_i(e_i b) != phi_i(b) + 1");
            }
            if (p.empty() != (node.eps[i] == 0)) report(b, i, "binf", "e_i(b) absent but eps_i(b) != 0, or vice versa");

            int string_length = 0;
            for (int cur = b; preds[cur][i].size() == 1 && string_length <= static_cast<int>(g.size());) {
                cur = preds[cur][i].front();
                ++string_length;
            }
            if (string_length != node.eps[i]) report(b, i, "binf", "eps_i(b) != length of the e_i-string");
        }
    }
    return out;
}

RootVector negated_root(const WeightVector& w) {
    RootVector r;
    r.coeffs.reserve(w.coeffs.size());
    for (int c : w.coeffs) r.coeffs.push_back(-c);
    return r;
}

std::map<RootVector, std::uint64_t> weight_census(const CrystalGraph& g) {
    std::map<RootVector, std::uint64_t> census;
    for (const auto& node : g.nodes()) ++census[negated_root(node.weight)];
    return census;
}

std::vector<RootVector> positive_roots(int n, int max_height) {
    std::vector<RootVector> roots;
    for (int len = 1; len <= max_height; ++len) {
        if (len % n != 0) {
            for (int s = 0; s < n; ++s) {
                RootVector r{std::vector<int>(static_cast<std::size_t>(n), 0)};
                for (int t = 0; t < len; ++t) ++r.coeffs[static_cast<std::size_t>((s + t) % n)];
                roots.push_back(std::move(r));
            }
        } else {
            RootVector r{std::vector<int>(static_cast<std::size_t>(n), len / n)};
            for (int copy = 0; copy < n - 1; ++copy) roots.push_back(r);
        }
    }
    return roots;
}

std::uint64_t kostant(const CartanData& cartan, const RootVector& beta) {
    const int n = cartan.rank();
    if (static_cast<int>(beta.coeffs.size()) != n) throw std::invalid_argument("kostant: wrong number of coordinates");
    if (!beta.nonnegative()) return 0;

    // Mixed-radix layout of the box 0 <= v <= beta.
    std::vector<std::size_t> stride(static_cast<std::size_t>(n));
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) {
        stride[k] = total;
        total *= static_cast<std::size_t>(beta.coeffs[k] + 1);
    }
    std::vector<std::uint64_t> ways(total, 0);
    ways[0] = 1;
    std::vector<int> v(static_cast<std::size_t>(n));
    for (const RootVector& root : positive_roots(n, beta.height())) {
        bool fits = true;
        std::size_t offset = 0;
        for (int k = 0; k < n; ++k) {
            fits &= root.coeffs[k] <= beta.coeffs[k];
            offset += stride[k] * static_cast<std::size_t>(root.coeffs[k]);
        }
        if (!fits) continue;
        // Unbounded knapsack: visit the box in increasing order.
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            bool ge = true;
            for (int k = n - 1; k >= 0; --k) {
                v[k] = static_cast<int>(rest / stride[k]);
                rest %= stride[k];
                ge &= v[k] >= root.coeffs[k];
            }
            if (ge) ways[idx] += ways[idx - offset];
        }
    }
    return ways[total - 1];
}

namespace {

using Json = nlohmann::ordered_json;

std::string escape_label(const std::vector<int>& word) {
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) s += (k ? "," : "") + std::to_string(word[k]);
    return s;
}

std::string export_dot(const CrystalGraph& g) {
    std::ostringstream os;
    os << "digraph nss_crystal {\n";
    os << "  // rank " << g.rank() << ", depth " << g.depth() << "\n";
    for (const auto& node : g.nodes()) {
        os << "  n" << node.id << " [label=\"" << node.id << ": [" << escape_label(node.word) << "] wt=("
           << escape_label(node.weight.coeffs) << ")\"];\n";
    }
    for (const auto& e : g.edges()) os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.i << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const CrystalGraph& g) {
    Json doc;
    doc["n"] = g.rank();
    doc["depth"] = g.depth();
    Json nodes = Json::array();
    for (const auto& node : g.nodes()) {
        Json j;
        j["id"] = node.id;
        j["word"] = node.word;
        j["weight"] = node.weight.coeffs;
        j["eps"] = node.eps;
        j["phi"] = node.phi;
        nodes.push_back(std::move(j));
    }
    doc["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"i", e.i}});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

}  // namespace

std::string export_graph(const CrystalGraph& g, ExportFormat format) {
    switch (format) {
        case ExportFormat::Dot: return export_dot(g);
        case ExportFormat::Json: return export_json(g);
    }
    throw std::invalid_argument("export_graph: unsupported format");
}

CrystalGraph import_graph_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
        const int n = doc.at("n").get<int>();
        const int depth = doc.at("depth").get<int>();
        CrystalGraph g(CartanData(n), depth, default_max_boxes(n, depth));
        const auto& nodes = doc.at("nodes");
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const auto& j = nodes[k];
            if (j.at("id").get<int>() != static_cast<int>(k)) throw std::runtime_error("node ids must be 0..N-1 in order");
            CrystalNode node;
            node.word = j.at("word").get<std::vector<int>>();
            node.weight.coeffs = j.at("weight").get<std::vector<int>>();
            node.eps = j.at("eps").get<std::vector<int>>();
            node.phi = j.at("phi").get<std::vector<int>>();
            g.add_node(std::move(node));
        }
        for (const auto& e : doc.at("edges")) {
            const int from = e.at("from").get<int>();
            const int to = e.at("to").get<int>();
            const int i = e.at("i").get<int>();
            if (from < 0 || from >= static_cast<int>(g.size()) || i < 0 || i >= n)
                throw std::runtime_error("edge endpoint or residue out of range");
            g.set_edge(from, i, to);
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("import_graph_json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("import_graph_json: ") + e.what());
    }
}

}  // namespace nss
