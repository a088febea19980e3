#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "nss/maya.hpp"

namespace nss {

/// Affine Cartan matrix of type A^(1)_{n-1}, rows/columns indexed by Z/nZ.
class CartanData {
public:
    explicit CartanData(int n);

    int rank() const { return n_; }
    int entry(int i, int j) const;
    std::vector<std::vector<int>> matrix() const;

    friend bool operator==(const CartanData&, const CartanData&) = default;

private:
    int n_;
};

/// Integer coefficients over the simple coroots h_0 .. h_{n-1}.
struct WeightVector {
    std::vector<int> coeffs;

    int height() const {
        int h = 0;
        for (int c : coeffs) h += c;
        return h;
    }
    friend bool operator==(const WeightVector&, const WeightVector&) = default;
    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// <w, h_i> = sum_j w_j a_{ji}.
int pair_with_coroot(const CartanData& cartan, const WeightVector& w, int i);

class ThetaNotStable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sigma-canonical left-black diagrams with a bounded number of boxes and
/// their positions in the enumeration order. One index exists per (n, bound).
struct DiagramIndex {
    int n = 0;
    int max_boxes = 0;
    std::vector<MayaDiagram> diagrams;
    std::unordered_map<MayaDiagram, int, MayaHash> position;

    static std::shared_ptr<const DiagramIndex> get(int n, int max_boxes);

    std::optional<int> find(const MayaDiagram& canonical) const {
        auto it = position.find(canonical);
        if (it == position.end()) return std::nullopt;
        return it->second;
    }
};

namespace detail {
struct NssNode;
}

/// An NSS datum f_{i_m} ... f_{i_1} O, stored as its generating word.
///
/// Values are computed on demand and memoized per datum, keyed by
/// sigma-canonical diagrams. Copies share the memo. Evaluation is thread-safe.
class NssDatum {
public:
    static NssDatum zero(const CartanData& cartan);

    NssDatum apply_fhat(int residue) const;

    const CartanData& cartan() const;
    int rank() const { return cartan().rank(); }
    const std::vector<int>& word() const;
    std::size_t length() const { return word().size(); }
    /// Datum for the word with its last letter removed; nullopt for O.
    std::optional<NssDatum> parent() const;
    /// Last letter of the word; -1 for O.
    int last_letter() const;

    /// M_gamma for a left-black diagram.
    int eval(const MayaDiagram& gamma) const;

    /// Theta(M)_tau for a right-black diagram: the stable value of
    /// M on invert_outside(tau, I) as the interval I grows.
    int theta(const MayaDiagram& tau) const;

    /// The interval schedule used by theta for a given tau and word length.
    static Interval theta_interval(const MayaDiagram& tau, int n, std::size_t word_length, int step);
    static int theta_max_steps(std::size_t word_length);

    WeightVector weight() const;
    int eps_hat(int residue) const;
    int phi_hat(int residue) const;

    /// c_i(M) = M_{Lambda_i} - M_{s_i Lambda_i} - 1 for an integer color i.
    int c_ainfty(int color) const;

    /// phi_hat(M, i) - 1 for the letter that produced this datum from its
    /// parent; this is the exponent in the min formula. Undefined on O.
    int step_exponent() const;

    /// Values of M on sigma_canonical_diagrams(n, max_boxes), in order.
    /// Installs the table so later eval calls on those diagrams are lookups.
    std::vector<int> fingerprint(int max_boxes) const;

    /// Installs a table computed elsewhere (see kernels.hpp).
    void install_table(std::shared_ptr<const DiagramIndex> index, std::vector<int> values) const;
    /// Installed table values for the given index, if any.
    const std::vector<int>* table_for(const DiagramIndex& index) const;

    /// Identity of the underlying shared node.
    const void* identity() const { return node_.get(); }

private:
    explicit NssDatum(std::shared_ptr<const detail::NssNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const detail::NssNode> node_;
};

/// The A_infinity single-color operator on an arbitrary integer-valued
/// function M of left-black diagrams:
///   (f~_color M)_gamma = min over mu in {gamma, gamma minus the color box}
///                        of M_mu + |gamma \ mu| * c.
int ftilde_ainfty(const std::function<int(const MayaDiagram&)>& m, int c, int color, const MayaDiagram& gamma);

}  // namespace nss
