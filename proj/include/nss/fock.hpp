#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "nss/laurent.hpp"
#include "nss/maya.hpp"

namespace nss {

/// F^- is spanned by left-black diagrams (bra vectors), F^+ by right-black
/// ones (ket vectors).
enum class FockSide : std::uint8_t { Minus, Plus };

inline Kind kind_of(FockSide side) { return side == FockSide::Minus ? Kind::LeftBlack : Kind::RightBlack; }

class FockCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite linear combination of basis diagrams with Laurent polynomial
/// coefficients. Zero coefficients are never stored.
template <CoeffRing C>
class FockVector {
public:
    using Poly = LaurentPoly<C>;

    explicit FockVector(FockSide side = FockSide::Minus) : side_(side) {}

    static FockVector basis(const MayaDiagram& m, Poly coeff = Poly::one()) {
        FockVector v(m.kind() == Kind::LeftBlack ? FockSide::Minus : FockSide::Plus);
        v.add(m, coeff);
        return v;
    }

    FockSide side() const { return side_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MayaDiagram, Poly>& terms() const { return terms_; }

    Poly coefficient(const MayaDiagram& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Poly{} : it->second;
    }

    void add(const MayaDiagram& m, const Poly& c) {
        if (m.kind() != kind_of(side_)) throw std::invalid_argument("FockVector: basis diagram of the wrong kind");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }

    FockVector times(const Poly& p) const {
        FockVector out(side_);
        for (const auto& [m, c] : terms_) out.add(m, c * p);
        return out;
    }

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    FockSide side_;
    std::map<MayaDiagram, Poly> terms_;
};

namespace detail {

template <CoeffRing C>
FockVector<C> raise_all(const FockVector<C>& v, int n, int residue) {
    FockVector<C> out(v.side());
    for (const auto& [m, c] : v.terms())
        for (int k : raising_labels(m, n, residue)) out.add(move_bead(m, k), c);
    return out;
}

template <CoeffRing C>
FockVector<C> lower_all(const FockVector<C>& v, int n, int residue) {
    FockVector<C> out(v.side());
    for (const auto& [m, c] : v.terms())
        for (int k : lowering_labels(m, n, residue)) out.add(move_bead(m, k), c);
    return out;
}

inline void require_side(FockSide actual, FockSide expected, const char* what) {
    if (actual != expected) throw std::invalid_argument(std::string(what) + ": vector lives on the wrong side");
}

}  // namespace detail

/// <gamma| E_i: sum over removals of one residue-i box.
template <CoeffRing C>
FockVector<C> e_act(const FockVector<C>& v, int n, int residue) {
    detail::require_side(v.side(), FockSide::Minus, "e_act");
    return detail::raise_all(v, n, residue);
}

/// <gamma| F_i: sum over additions of one residue-i box.
template <CoeffRing C>
FockVector<C> f_act(const FockVector<C>& v, int n, int residue) {
    detail::require_side(v.side(), FockSide::Minus, "f_act");
    return detail::lower_all(v, n, residue);
}

/// Adjoint of E_i under the inversion pairing: adds a residue-i box to the
/// upward partition. In bead terms it is the same move as on F^-: a black
/// bead at k-1 steps up to a white slot k with k = i (mod n).
template <CoeffRing C>
FockVector<C> e_plus_act(const FockVector<C>& v, int n, int residue) {
    detail::require_side(v.side(), FockSide::Plus, "e_plus_act");
    return detail::raise_all(v, n, residue);
}

/// <u, v> for u in F^-, v in F^+, with <gamma|tau> = 1 iff tau is the color
/// inversion of gamma.
template <CoeffRing C>
LaurentPoly<C> pairing(const FockVector<C>& u, const FockVector<C>& v) {
    detail::require_side(u.side(), FockSide::Minus, "pairing");
    detail::require_side(v.side(), FockSide::Plus, "pairing");
    LaurentPoly<C> out;
    for (const auto& [m, c] : u.terms()) {
        auto it = v.terms().find(m.inverted());
        if (it != v.terms().end()) out += c * it->second;
    }
    return out;
}

/// v * x_i(p) = v * sum_k E_i^k p^k / k!, with E_i (or E_i^+ on the plus side).
/// The series is finite on every basis vector. `cap` bounds the number of
/// nonzero series terms beyond the constant one; exceeding it throws
/// FockCapExceeded.
template <CoeffRing C>
FockVector<C> x_act(const FockVector<C>& v, int n, int residue, const LaurentPoly<C>& p, int cap = 1 << 20) {
    FockVector<C> result = v;
    FockVector<C> term = v;
    for (int k = 1; !term.is_zero(); ++k) {
        term = detail::raise_all(term, n, residue);
        if (term.is_zero()) break;
        if (k > cap) throw FockCapExceeded("x_act: series did not terminate within the box cap");
        term = term.times(p.scaled(C(Rational(1, k))));
        result += term;
    }
    return result;
}

/// Minimum valuation over all coefficients; +inf for the zero vector.
template <CoeffRing C>
Valuation vec_val(const FockVector<C>& v) {
    Valuation best = Valuation::infinity();
    for (const auto& [m, c] : v.terms()) best = std::min(best, c.val());
    return best;
}

}  // namespace nss
