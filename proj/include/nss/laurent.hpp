#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace nss {

using Rational = mpq_class;

/// Integer or +infinity. Valuations of zero polynomials and zero vectors are
/// +infinity.
class Valuation {
public:
    constexpr Valuation() = default;  // +inf
    constexpr Valuation(int v) : finite_(true), value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr Valuation infinity() { return {}; }

    constexpr bool is_finite() const { return finite_; }
    constexpr int value() const { return value_; }

    friend constexpr bool operator==(Valuation a, Valuation b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
        if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
        return a.value_ <=> b.value_;
    }
    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return a.value_ + b.value_;
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

private:
    bool finite_ = false;
    int value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Valuation v) { return os << v.to_string(); }

/// Sparse polynomial over the rationals in indeterminates a_1, a_2, ...
/// Monomials are exponent vectors with trailing zeros trimmed; entry k is the
/// exponent of a_{k+1}.
class MultiPoly {
public:
    using Monomial = std::vector<int>;

    MultiPoly() = default;
    MultiPoly(Rational c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace(Monomial{}, std::move(c));
    }
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    /// The indeterminate a_index (1-based).
    static MultiPoly variable(int index);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    int total_degree() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Substitute a_k -> values[k-1].
    Rational evaluate(const std::vector<Rational>& values) const;

    std::string to_string() const;

private:
    static void trim(Monomial& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }
    void add_term(Monomial m, const Rational& c);

    std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const MultiPoly& c) { return c.is_zero(); }
inline std::string coeff_string(const Rational& c) { return c.get_str(); }
inline std::string coeff_string(const MultiPoly& c) { return c.to_string(); }

/// Exact commutative coefficient ring with a decidable zero test.
template <class C>
concept CoeffRing = requires(C a, const C& b) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(b) } -> std::convertible_to<bool>;
    { coeff_string(b) } -> std::convertible_to<std::string>;
    C(Rational(1));
};

/// Finite sum of c_k t^k over a coefficient ring. No zero coefficient is ever
/// stored.
template <CoeffRing C>
class LaurentPoly {
public:
    using Coeff = C;

    LaurentPoly() = default;

    static LaurentPoly monomial(C c, int exponent) {
        LaurentPoly p;
        if (!nss::is_zero(c)) p.terms_.emplace(exponent, std::move(c));
        return p;
    }
    static LaurentPoly constant(C c) { return monomial(std::move(c), 0); }
    static LaurentPoly one() { return constant(C(Rational(1))); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, C>& terms() const { return terms_; }

    /// Smallest exponent carrying a nonzero coefficient.
    Valuation val() const {
        if (terms_.empty()) return Valuation::infinity();
        return terms_.begin()->first;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, C(Rational(0)) - c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const C& c) const {
        LaurentPoly out;
        for (const auto& [e, x] : terms_) out.add_term(e, x * c);
        return out;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + coeff_string(c) + ")";
            if (e != 0) s += "*t^" + std::to_string(e);
        }
        return s;
    }

private:
    void add_term(int e, const C& c) {
        if (nss::is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (nss::is_zero(it->second)) terms_.erase(it);
    }

    std::map<int, C> terms_;
};

template <CoeffRing C>
LaurentPoly<C> lp_add(const LaurentPoly<C>& a, const LaurentPoly<C>& b) { return a + b; }
template <CoeffRing C>
LaurentPoly<C> lp_mul(const LaurentPoly<C>& a, const LaurentPoly<C>& b) { return a * b; }
template <CoeffRing C>
LaurentPoly<C> lp_scale(const LaurentPoly<C>& a, const C& c) { return a.scaled(c); }
template <CoeffRing C>
Valuation lp_val(const LaurentPoly<C>& a) { return a.val(); }

using RationalLaurent = LaurentPoly<Rational>;
using SymbolicLaurent = LaurentPoly<MultiPoly>;

}  // namespace nss
