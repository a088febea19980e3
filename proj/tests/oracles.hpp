#pragma once

// Slow reference implementations used only by the tests. They work on plain
// partitions and white-bead lists and share no code paths with the library's
// Maya machinery, memo tables or sigma canonicalization.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "nss/maya.hpp"

namespace oracle {

using Parts = std::vector<int>;

struct Charged {
    Parts parts;
    int charge = 0;
    friend auto operator<=>(const Charged&, const Charged&) = default;
};

inline int size(const Charged& p) {
    int s = 0;
    for (int x : p.parts) s += x;
    return s;
}

inline int mod(int a, int n) { return ((a % n) + n) % n; }

/// Content of box (r, c), 1-based, shifted by the charge.
inline int content(const Charged& p, int r, int c) { return p.charge + c - r; }

/// Rows whose last box is removable with the given residue.
inline std::vector<int> removable_rows(const Charged& p, int n, int residue) {
    std::vector<int> rows;
    for (std::size_t r = 0; r < p.parts.size(); ++r) {
        int next = r + 1 < p.parts.size() ? p.parts[r + 1] : 0;
        if (p.parts[r] > next && mod(content(p, static_cast<int>(r) + 1, p.parts[r]), n) == residue)
            rows.push_back(static_cast<int>(r));
    }
    return rows;
}

inline Charged drop_rows(Charged p, const std::vector<int>& rows) {
    for (int r : rows) --p.parts[static_cast<std::size_t>(r)];
    while (!p.parts.empty() && p.parts.back() == 0) p.parts.pop_back();
    return p;
}

/// Every partition reached by removing a subset of the residue-i removable
/// boxes, with the subset size.
inline std::vector<std::pair<Charged, int>> removals(const Charged& p, int n, int residue) {
    auto rows = removable_rows(p, n, residue);
    std::vector<std::pair<Charged, int>> out;
    for (std::uint32_t mask = 0; mask < (1u << rows.size()); ++mask) {
        std::vector<int> chosen;
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (mask >> k & 1u) chosen.push_back(rows[k]);
        out.emplace_back(drop_rows(p, chosen), static_cast<int>(chosen.size()));
    }
    return out;
}

/// Left-black diagram given by its white labels: every label below `floor`
/// is white, plus the listed labels at or above it.
inline Charged from_whites(std::vector<int> whites_above, int floor) {
    std::sort(whites_above.begin(), whites_above.end(), std::greater<>());
    const int k = static_cast<int>(whites_above.size());
    Charged p;
    p.charge = floor + k;
    for (int r = 1; r <= k; ++r) p.parts.push_back(whites_above[static_cast<std::size_t>(r - 1)] - p.charge + r);
    while (!p.parts.empty() && p.parts.back() == 0) p.parts.pop_back();
    return p;
}

inline nss::ChargedPartition to_lib(const Charged& p) { return {p.parts, p.charge, nss::Orientation::Downward}; }

/// Interval half-width used by the naive Theta; far beyond the stable range
/// for the word lengths tested.
inline int theta_radius(int n, std::size_t len) { return 3 * n * static_cast<int>(len + 1) + 4; }

/// Naive evaluation of f_{w_m} ... f_{w_1} O by the min recursion on
/// partitions, with step exponents recomputed from scratch through Theta.
class NaiveNss {
public:
    NaiveNss(int n, std::vector<int> word) : n_(n), word_(std::move(word)) {
        for (std::size_t j = 0; j < word_.size(); ++j) exps_.push_back(phi(j, word_[j]) - 1);
    }

    int eval(const Charged& g) const { return eval_prefix(word_.size(), g); }

    /// Theta of the prefix datum on Lambda_i (swap = false) or s_i Lambda_i.
    int theta_lambda(std::size_t prefix, int i, bool swap) const {
        const int R = theta_radius(n_, prefix);
        std::vector<int> whites;
        for (int k = i; k <= R; ++k) whites.push_back(k);
        if (swap) std::replace(whites.begin(), whites.end(), i, i - 1);
        return eval_prefix(prefix, from_whites(whites, -R));
    }

    int phi(std::size_t prefix, int i) const { return theta_lambda(prefix, i, false) - theta_lambda(prefix, i, true); }
    const std::vector<int>& exponents() const { return exps_; }

private:
    int eval_prefix(std::size_t len, const Charged& g) const {
        if (len == 0) return 0;
        int best = 0;
        bool first = true;
        for (const auto& [mu, moved] : removals(g, n_, word_[len - 1])) {
            int v = eval_prefix(len - 1, mu) + moved * exps_[len - 1];
            if (first || v < best) best = v;
            first = false;
        }
        return best;
    }

    int n_;
    std::vector<int> word_;
    std::vector<int> exps_;
};

/// Positive roots of A^(1)_{n-1} up to a height, built from the finite root
/// system: alpha + m*delta (alpha > 0, m >= 0), -alpha + m*delta (m >= 1) and
/// m*delta repeated n-1 times. alpha_0 = delta - theta.
inline std::vector<std::vector<int>> affine_roots(int n, int max_height) {
    std::vector<std::vector<int>> roots;
    auto push = [&](std::vector<int> r) {
        int h = 0;
        for (int c : r) h += c;
        if (h >= 1 && h <= max_height) roots.push_back(std::move(r));
    };
    for (int m = 0; m <= max_height; ++m) {
        for (int a = 1; a < n; ++a)
            for (int b = a; b < n; ++b) {
                std::vector<int> pos(static_cast<std::size_t>(n), m), neg(static_cast<std::size_t>(n), m);
                for (int k = a; k <= b; ++k) {
                    ++pos[static_cast<std::size_t>(k)];
                    --neg[static_cast<std::size_t>(k)];
                }
                push(pos);
                if (m >= 1) push(neg);
            }
        if (m >= 1)
            for (int copy = 0; copy < n - 1; ++copy) push(std::vector<int>(static_cast<std::size_t>(n), m));
    }
    return roots;
}

/// Number of multisets of labelled positive roots summing to beta, by direct
/// enumeration with nondecreasing root index.
inline std::uint64_t brute_kostant(int n, const std::vector<int>& beta) {
    int h = 0;
    for (int c : beta) h += c;
    const auto roots = affine_roots(n, h);
    std::function<std::uint64_t(std::vector<int>&, std::size_t)> go = [&](std::vector<int>& rest, std::size_t from) {
        bool zero = std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; });
        if (zero) return std::uint64_t{1};
        std::uint64_t total = 0;
        for (std::size_t r = from; r < roots.size(); ++r) {
            bool fits = true;
            for (std::size_t k = 0; k < rest.size(); ++k) fits = fits && roots[r][k] <= rest[k];
            if (!fits) continue;
            for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= roots[r][k];
            total += go(rest, r);
            for (std::size_t k = 0; k < rest.size(); ++k) rest[k] += roots[r][k];
        }
        return total;
    };
    std::vector<int> rest = beta;
    return go(rest, 0);
}

/// All charged partitions with at most max_size boxes and charge in [lo, hi].
inline std::vector<Charged> charged_partitions(int max_size, int lo, int hi) {
    std::vector<Parts> parts;
    std::function<void(Parts&, int, int)> gen = [&](Parts& cur, int left, int cap) {
        parts.push_back(cur);
        for (int x = std::min(left, cap); x >= 1; --x) {
            cur.push_back(x);
            gen(cur, left - x, x);
            cur.pop_back();
        }
    };
    Parts cur;
    gen(cur, max_size, max_size);
    std::vector<Charged> out;
    for (int c = lo; c <= hi; ++c)
        for (const auto& p : parts) out.push_back({p, c});
    return out;
}

/// All words of the given length over Z/nZ.
inline std::vector<std::vector<int>> words(int n, int length) {
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < length; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& w : out)
            for (int i = 0; i < n; ++i) {
                next.push_back(w);
                next.back().push_back(i);
            }
        out = std::move(next);
    }
    return out;
}

inline std::vector<std::vector<int>> words_up_to(int n, int max_length) {
    std::vector<std::vector<int>> out;
    for (int len = 0; len <= max_length; ++len)
        for (auto& w : words(n, len)) out.push_back(std::move(w));
    return out;
}

}  // namespace oracle
