#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nss/fock.hpp"
#include "nss/nss.hpp"

namespace nss {

/// One factor x_i(a_k t^e) of a group word.
struct GroupFactor {
    int residue = 0;
    int exponent = 0;
    int indeterminate = 0;  // k in a_k, 1-based

    friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

/// Symbolic generic point x_{i_m}(a_m t^{e_m}) ... x_{i_1}(a_1 t^{e_1}) of the
/// cycle attached to the crystal word (i_1, ..., i_m). `factors` is stored
/// left to right, so factors.front() comes from the newest letter.
/// e_j = phi_hat_{i_j}(M_{j-1}) - 1, where M_{j-1} is the datum of the first
/// j-1 letters.
struct GroupWord {
    int n = 2;
    std::vector<int> crystal_word;
    std::vector<GroupFactor> factors;
};

GroupWord generic_element(const NssDatum& m);

/// How the indeterminates a_k are specialized.
struct Specialization {
    enum class Mode { Symbolic, Random };
    Mode mode = Mode::Symbolic;
    std::uint64_t seed = 0;

    static Specialization symbolic() { return {}; }
    static Specialization random(std::uint64_t seed) { return {Mode::Random, seed}; }
};

/// Random mode substitutes nonzero rationals drawn from a seeded generator.
std::vector<Rational> random_specialization(std::size_t count, std::uint64_t seed);

/// <gamma| * g: the factors act on the row vector from left to right.
FockVector<MultiPoly> apply_word_minus(const GroupWord& w, const MayaDiagram& gamma);
FockVector<Rational> apply_word_minus(const GroupWord& w, const MayaDiagram& gamma, const std::vector<Rational>& values);

/// D_gamma(g) = val(<gamma| g).
Valuation d_gamma(const GroupWord& w, const MayaDiagram& gamma, const Specialization& spec = {});

/// Order in which the factors of g act on a ket |tau> in F^+.
/// SameAsMinus: leftmost factor first, as for bras. This is the convention
/// under which D_tau agrees with Theta; Reversed is kept for comparison.
enum class PlusOrder { SameAsMinus, Reversed };

FockVector<MultiPoly> apply_word_plus(const GroupWord& w, const MayaDiagram& tau, int cap,
                                      PlusOrder order = PlusOrder::SameAsMinus);

/// D_tau(g) = val of the F^+ action of g on |tau>. `cap` bounds the box
/// additions per factor; FockCapExceeded is thrown when it binds.
Valuation d_tau(const GroupWord& w, const MayaDiagram& tau, int cap = 64, PlusOrder order = PlusOrder::SameAsMinus);

struct CompareEntry {
    MayaDiagram diagram;
    int nss_value = 0;
    Valuation oracle_value;
    bool ok = false;
};

struct CompareReport {
    int n = 2;
    std::vector<int> word;
    std::vector<CompareEntry> results;
    bool pass = true;

    std::size_t mismatches() const {
        std::size_t k = 0;
        for (const auto& r : results) k += r.ok ? 0 : 1;
        return k;
    }
};

enum class Execution { Serial, Parallel };

/// nss.eval(M, gamma) against d_gamma(generic_element(M), gamma) for each gamma.
CompareReport compare(const NssDatum& m, const std::vector<MayaDiagram>& gammas, const Specialization& spec = {},
                      Execution exec = Execution::Parallel);

std::string report_json(const CompareReport& report);

}  // namespace nss
