#include "nss/nss.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "nss/kernels.hpp"

namespace nss {

CartanData::CartanData(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("CartanData: rank must be at least 2");
}

int CartanData::entry(int i, int j) const {
    i = residue_mod(i, n_);
    j = residue_mod(j, n_);
    if (i == j) return 2;
    if (n_ == 2) return -2;
    int d = residue_mod(i - j, n_);
    return (d == 1 || d == n_ - 1) ? -1 : 0;
}

std::vector<std::vector<int>> CartanData::matrix() const {
    std::vector<std::vector<int>> a(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) a[i][j] = entry(i, j);
    return a;
}

int pair_with_coroot(const CartanData& cartan, const WeightVector& w, int i) {
    int s = 0;
    for (int j = 0; j < cartan.rank(); ++j) s += w.coeffs[j] * cartan.entry(j, i);
    return s;
}

std::shared_ptr<const DiagramIndex> DiagramIndex::get(int n, int max_boxes) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const DiagramIndex>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{n, max_boxes}];
    if (!slot) {
        auto idx = std::make_shared<DiagramIndex>();
        idx->n = n;
        idx->max_boxes = max_boxes;
        idx->diagrams = sigma_canonical_diagrams(n, max_boxes);
        idx->position.reserve(idx->diagrams.size());
        for (std::size_t k = 0; k < idx->diagrams.size(); ++k)
            idx->position.emplace(idx->diagrams[k], static_cast<int>(k));
        slot = std::move(idx);
    }
    return slot;
}

namespace detail {

struct NssNode {
    CartanData cartan;
    std::shared_ptr<const NssNode> parent;
    int letter = -1;
    std::vector<int> word;

    mutable std::once_flag exponent_once;
    mutable int exponent = 0;

    mutable std::mutex mu;
    mutable std::unordered_map<MayaDiagram, int, MayaHash> memo;
    mutable std::unordered_map<MayaDiagram, int, MayaHash> theta_memo;
    mutable std::vector<std::pair<std::shared_ptr<const DiagramIndex>, std::shared_ptr<const std::vector<int>>>> tables;

    explicit NssNode(CartanData c) : cartan(c) {}
};

}  // namespace detail

NssDatum NssDatum::zero(const CartanData& cartan) {
    return NssDatum(std::make_shared<detail::NssNode>(cartan));
}

NssDatum NssDatum::apply_fhat(int residue) const {
    auto child = std::make_shared<detail::NssNode>(node_->cartan);
    child->parent = node_;
    child->letter = residue_mod(residue, rank());
    child->word = node_->word;
    child->word.push_back(child->letter);
    return NssDatum(std::move(child));
}

const CartanData& NssDatum::cartan() const { return node_->cartan; }
const std::vector<int>& NssDatum::word() const { return node_->word; }
int NssDatum::last_letter() const { return node_->letter; }

std::optional<NssDatum> NssDatum::parent() const {
    if (!node_->parent) return std::nullopt;
    return NssDatum(node_->parent);
}

int NssDatum::step_exponent() const {
    if (!node_->parent) throw std::logic_error("step_exponent: the zero datum has no generating letter");
    std::call_once(node_->exponent_once, [this] { node_->exponent = parent()->phi_hat(node_->letter) - 1; });
    return node_->exponent;
}

const std::vector<int>* NssDatum::table_for(const DiagramIndex& index) const {
    std::lock_guard lock(node_->mu);
    for (const auto& [idx, values] : node_->tables)
        if (idx.get() == &index) return values.get();
    return nullptr;
}

void NssDatum::install_table(std::shared_ptr<const DiagramIndex> index, std::vector<int> values) const {
    if (values.size() != index->diagrams.size()) throw std::invalid_argument("install_table: size mismatch");
    std::lock_guard lock(node_->mu);
    for (const auto& [idx, v] : node_->tables)
        if (idx == index) return;
    node_->tables.emplace_back(std::move(index), std::make_shared<const std::vector<int>>(std::move(values)));
}

int NssDatum::eval(const MayaDiagram& gamma) const {
    if (gamma.kind() != Kind::LeftBlack) throw std::invalid_argument("eval: expected a left-black diagram");
    if (!node_->parent) return 0;
    const int n = rank();
    const MayaDiagram canonical = sigma_canonical(gamma, n);
    {
        std::lock_guard lock(node_->mu);
        for (const auto& [idx, values] : node_->tables)
            if (auto pos = idx->find(canonical)) return (*values)[*pos];
        if (auto it = node_->memo.find(canonical); it != node_->memo.end()) return it->second;
    }
    const int e = step_exponent();
    const NssDatum prev(node_->parent);
    int best = std::numeric_limits<int>::max();
    for (const auto& [mu, removed] : raising_subsets(canonical, n, node_->letter))
        best = std::min(best, prev.eval(mu) + removed * e);
    std::lock_guard lock(node_->mu);
    node_->memo.emplace(canonical, best);
    return best;
}

Interval NssDatum::theta_interval(const MayaDiagram& tau, int n, std::size_t word_length, int step) {
    int c = 1;
    for (int k : tau.flips()) c = std::max(c, std::abs(k) + 1);
    const int len = std::max<int>(1, static_cast<int>(word_length));
    const int half = c + step * n * len;
    return {-half, half};
}

int NssDatum::theta_max_steps(std::size_t word_length) {
    return 2 * std::max<int>(1, static_cast<int>(word_length)) + 4;
}

int NssDatum::theta(const MayaDiagram& tau) const {
    if (tau.kind() != Kind::RightBlack) throw std::invalid_argument("theta: expected a right-black diagram");
    if (!node_->parent) return 0;
    const int n = rank();
    const MayaDiagram canonical = sigma_canonical(tau, n);
    {
        std::lock_guard lock(node_->mu);
        if (auto it = node_->theta_memo.find(canonical); it != node_->theta_memo.end()) return it->second;
    }
    const std::size_t len = length();
    int prev = eval(invert_outside(canonical, theta_interval(canonical, n, len, 1)));
    const int max_steps = theta_max_steps(len);
    for (int step = 2; step <= max_steps; ++step) {
        int v = eval(invert_outside(canonical, theta_interval(canonical, n, len, step)));
        if (v == prev) {
            std::lock_guard lock(node_->mu);
            node_->theta_memo.emplace(canonical, v);
            return v;
        }
        prev = v;
    }
    throw ThetaNotStable("theta: value did not stabilize for " + to_string(tau));
}

WeightVector NssDatum::weight() const {
    WeightVector w;
    w.coeffs.resize(rank());
    for (int j = 0; j < rank(); ++j) w.coeffs[j] = theta(lambda_i(j));
    return w;
}

int NssDatum::eps_hat(int residue) const {
    const int i = residue_mod(residue, rank());
    return -theta(lambda_i(i)) - theta(s_i_lambda_i(i)) + theta(lambda_i(i - 1)) + theta(lambda_i(i + 1));
}

int NssDatum::phi_hat(int residue) const {
    const int i = residue_mod(residue, rank());
    return pair_with_coroot(cartan(), weight(), i) + eps_hat(i);
}

int NssDatum::c_ainfty(int color) const { return theta(lambda_i(color)) - theta(s_i_lambda_i(color)) - 1; }

std::vector<int> NssDatum::fingerprint(int max_boxes) const {
    auto index = DiagramIndex::get(rank(), max_boxes);
    if (const auto* values = table_for(*index)) return *values;
    std::vector<int> values = kernels::fingerprint_table_parallel(*this, *index);
    install_table(index, values);
    return values;
}

int ftilde_ainfty(const std::function<int(const MayaDiagram&)>& m, int c, int color, const MayaDiagram& gamma) {
    int best = m(gamma);
    if (gamma.color(color) == Bead::White && gamma.color(color - 1) == Bead::Black)
        best = std::min(best, m(move_bead(gamma, color)) + c);
    return best;
}

}  // namespace nss
