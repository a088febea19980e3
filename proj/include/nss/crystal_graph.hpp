#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nss/nss.hpp"

namespace nss {

/// Integer coefficients over the simple roots alpha_0 .. alpha_{n-1}.
struct RootVector {
    std::vector<int> coeffs;

    int height() const {
        int h = 0;
        for (int c : coeffs) h += c;
        return h;
    }
    bool nonnegative() const {
        for (int c : coeffs)
            if (c < 0) return false;
        return true;
    }
    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

struct CrystalNode {
    int id = 0;
    std::vector<int> word;
    WeightVector weight;
    std::vector<int> eps;
    std::vector<int> phi;
    std::vector<int> fingerprint;
    std::optional<NssDatum> datum;  // absent for graphs loaded from JSON
};

struct ExploreOptions {
    int max_boxes = -1;  // -1: n * (depth + 1)
    bool parallel = true;
};

/// Nodes are sorted by (height, weight, fingerprint); ids are positions in
/// that order, so node 0 is the zero datum. `f_edges[b][i]` is the id of
/// f_i(b), or -1 when b sits on the last explored layer.
class CrystalGraph {
public:
    CrystalGraph(CartanData cartan, int depth, int max_boxes)
        : cartan_(cartan), depth_(depth), max_boxes_(max_boxes) {}

    const CartanData& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank(); }
    int depth() const { return depth_; }
    int max_boxes() const { return max_boxes_; }

    const std::vector<CrystalNode>& nodes() const { return nodes_; }
    const CrystalNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const { return nodes_.size(); }

    int f_edge(int id, int i) const { return f_edges_.at(static_cast<std::size_t>(id)).at(static_cast<std::size_t>(i)); }
    const std::vector<std::vector<int>>& f_edges() const { return f_edges_; }

    /// Every f-edge (from, to, i) in (from, i) order.
    struct Edge {
        int from;
        int to;
        int i;
        friend bool operator==(const Edge&, const Edge&) = default;
    };
    std::vector<Edge> edges() const;

    // Building and test hooks.
    int add_node(CrystalNode node);
    void set_edge(int from, int i, int to);

private:
    CartanData cartan_;
    int depth_;
    int max_boxes_;
    std::vector<CrystalNode> nodes_;
    std::vector<std::vector<int>> f_edges_;
};

int default_max_boxes(int n, int depth);

CrystalGraph explore(const CartanData& cartan, int depth, const ExploreOptions& options = {});

/// The f_i-predecessor of b, recovered by inverting edges.
std::optional<int> e_hat(const CrystalGraph& g, int b, int i);

struct AxiomViolation {
    int node = 0;
    int residue = 0;
    std::string axiom;  // "i", "ii", "iii", "iv", "binf"
    std::string message;
};

/// Crystal axioms (i)-(iv) on every node and residue, plus the B(infinity)
/// string checks: e_i(b) is absent iff eps_i(b) = 0, and eps_i(b) equals the
/// length of the e_i-string above b. Empty result means pass.
std::vector<AxiomViolation> check_axioms(const CrystalGraph& g);

/// Number of explored nodes of weight -beta, per beta.
std::map<RootVector, std::uint64_t> weight_census(const CrystalGraph& g);

/// Root coordinates beta with wt = -beta (the Cartan datum is self-dual).
RootVector negated_root(const WeightVector& w);

/// Positive roots of A^(1)_{n-1} of height <= max_height, with multiplicity:
/// each imaginary root m*delta is listed n-1 times.
std::vector<RootVector> positive_roots(int n, int max_height);

/// Kostant partition function: number of ways to write beta as a multiset of
/// positive roots counted with multiplicity. Dynamic programming over the box
/// of vectors below beta.
std::uint64_t kostant(const CartanData& cartan, const RootVector& beta);

enum class ExportFormat { Dot, Json };

std::string export_graph(const CrystalGraph& g, ExportFormat format);
/// Inverse of the JSON export. Throws std::runtime_error on malformed input.
CrystalGraph import_graph_json(const std::string& text);

}  // namespace nss
