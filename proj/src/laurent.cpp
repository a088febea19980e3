#include "nss/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace nss {

MultiPoly MultiPoly::variable(int index) {
    if (index < 1) throw std::invalid_argument("MultiPoly::variable: indeterminates are 1-based");
    Monomial m(static_cast<std::size_t>(index), 0);
    m.back() = 1;
    MultiPoly p;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

int MultiPoly::total_degree() const {
    int best = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (int e : m) d += e;
        best = std::max(best, d);
    }
    return best;
}

void MultiPoly::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    trim(m);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            MultiPoly::Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t k = 0; k < ma.size(); ++k) m[k] += ma[k];
            for (std::size_t k = 0; k < mb.size(); ++k) m[k] += mb[k];
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& values) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (k >= values.size()) throw std::out_of_range("MultiPoly::evaluate: missing value for indeterminate");
            for (int e = 0; e < m[k]; ++e) term *= values[k];
        }
        total += term;
    }
    return total;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        bool has_var = false;
        for (int e : m) has_var |= e != 0;
        if (!has_var || c != 1) s += c.get_str();
        bool need_star = !has_var || c != 1;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (need_star) s += "*";
            need_star = true;
            s += "a" + std::to_string(k + 1);
            if (m[k] != 1) s += "^" + std::to_string(m[k]);
        }
    }
    return s;
}

}  // namespace nss
