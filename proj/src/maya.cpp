#include "nss/maya.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nss {

MayaDiagram MayaDiagram::from_flips(Kind kind, std::vector<int> flips) {
    std::sort(flips.begin(), flips.end());
    std::vector<int> out;
    out.reserve(flips.size());
    for (std::size_t i = 0; i < flips.size();) {
        std::size_t j = i;
        while (j < flips.size() && flips[j] == flips[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(flips[i]);
        i = j;
    }
    return MayaDiagram(kind, std::move(out));
}

bool MayaDiagram::is_flipped(int label) const {
    return std::binary_search(flips_.begin(), flips_.end(), label);
}

Bead MayaDiagram::vacuum_color(int label) const {
    bool black = kind_ == Kind::LeftBlack ? label >= 0 : label < 0;
    return black ? Bead::Black : Bead::White;
}

Bead MayaDiagram::color(int label) const {
    Bead v = vacuum_color(label);
    if (!is_flipped(label)) return v;
    return v == Bead::Black ? Bead::White : Bead::Black;
}

int MayaDiagram::charge() const {
    int c = 0;
    for (int k : flips_) c += k >= 0 ? 1 : -1;
    return c;
}

Interval MayaDiagram::support_hull() const {
    if (flips_.empty()) return {0, -1};
    return {flips_.front(), flips_.back()};
}

MayaDiagram MayaDiagram::inverted() const {
    return MayaDiagram(kind_ == Kind::LeftBlack ? Kind::RightBlack : Kind::LeftBlack, flips_);
}

MayaDiagram MayaDiagram::with_toggled(int a, int b) const {
    std::vector<int> f = flips_;
    for (int k : {a, b}) {
        auto it = std::lower_bound(f.begin(), f.end(), k);
        if (it != f.end() && *it == k)
            f.erase(it);
        else
            f.insert(it, k);
    }
    return MayaDiagram(kind_, std::move(f));
}

std::size_t MayaDiagram::hash() const {
    std::size_t h = kind_ == Kind::LeftBlack ? 0x9e3779b97f4a7c15ULL : 0xc2b2ae3d27d4eb4fULL;
    for (int k : flips_) {
        h ^= std::hash<int>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool ChargedPartition::valid() const {
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (parts[r] <= 0) return false;
        if (r > 0 && parts[r] > parts[r - 1]) return false;
    }
    return true;
}

int ChargedPartition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

int MayaDiagram::box_count() const { return to_partition(*this).size(); }

// Whites of the left-black diagram of (parts, c) are {parts_r - r + c : r >= 1},
// with parts_r = 0 past the last row.
MayaDiagram from_partition(const ChargedPartition& p) {
    if (!p.valid()) throw std::invalid_argument("from_partition: parts must be positive and weakly decreasing");
    const int len = static_cast<int>(p.parts.size());
    std::vector<int> row_whites;
    row_whites.reserve(len);
    for (int r = 1; r <= len; ++r) row_whites.push_back(p.parts[r - 1] - r + p.charge);
    std::sort(row_whites.begin(), row_whites.end());
    const int tail_top = p.charge - len - 1;  // every label <= tail_top is white

    std::vector<int> flips;
    for (int w : row_whites)
        if (w >= 0) flips.push_back(w);
    for (int k = 0; k <= tail_top; ++k) flips.push_back(k);
    for (int k = tail_top + 1; k < 0; ++k)
        if (!std::binary_search(row_whites.begin(), row_whites.end(), k)) flips.push_back(k);
    MayaDiagram m = MayaDiagram::from_flips(Kind::LeftBlack, std::move(flips));
    return p.orientation == Orientation::Downward ? m : m.inverted();
}

ChargedPartition to_partition(const MayaDiagram& m) {
    const MayaDiagram left = m.kind() == Kind::LeftBlack ? m : m.inverted();
    ChargedPartition p;
    p.charge = left.charge();
    p.orientation = m.kind() == Kind::LeftBlack ? Orientation::Downward : Orientation::Upward;
    const auto& f = left.flips();
    int top = f.empty() ? 0 : std::max(f.back(), 0);
    int bottom = (f.empty() ? 0 : std::min(f.front(), 0)) - 1;
    int r = 0;
    for (int k = top; k >= bottom; --k) {
        if (left.color(k) != Bead::White) continue;
        ++r;
        int part = k - p.charge + r;
        if (part <= 0) break;
        p.parts.push_back(part);
    }
    return p;
}

int box_slot_label(int row, int col, const ChargedPartition& p) {
    if (row < 1 || col < 1 || row > static_cast<int>(p.parts.size()) || col > p.parts[row - 1])
        throw std::out_of_range("box_slot_label: box outside partition");
    return p.charge + col - row;
}

std::vector<BoxRef> removable_boxes(const ChargedPartition& p, int n, int residue) {
    std::vector<BoxRef> out;
    const int len = static_cast<int>(p.parts.size());
    for (int r = 1; r <= len; ++r) {
        int col = p.parts[r - 1];
        if (r < len && p.parts[r] == col) continue;
        int label = p.charge + col - r;
        if (residue_mod(label, n) == residue_mod(residue, n)) out.push_back({r, col, label, residue_mod(label, n)});
    }
    return out;
}

std::vector<BoxRef> addable_boxes(const ChargedPartition& p, int n, int residue) {
    std::vector<BoxRef> out;
    const int len = static_cast<int>(p.parts.size());
    for (int r = 1; r <= len + 1; ++r) {
        int col = (r <= len ? p.parts[r - 1] : 0) + 1;
        if (r > 1 && p.parts[r - 2] < col) continue;
        int label = p.charge + col - r;
        if (residue_mod(label, n) == residue_mod(residue, n)) out.push_back({r, col, label, residue_mod(label, n)});
    }
    return out;
}

std::vector<ChargedPartition> removal_subsets(const ChargedPartition& p, int n, int residue) {
    const auto boxes = removable_boxes(p, n, residue);
    std::vector<ChargedPartition> out;
    const std::size_t count = std::size_t{1} << boxes.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        ChargedPartition q = p;
        for (std::size_t b = 0; b < boxes.size(); ++b)
            if (mask & (std::size_t{1} << b)) --q.parts[boxes[b].row - 1];
        while (!q.parts.empty() && q.parts.back() == 0) q.parts.pop_back();
        out.push_back(std::move(q));
    }
    return out;
}

namespace {

// Candidate labels k for a move touching slots k-1 and k: outside this range
// both beads have vacuum color and no move is possible.
Interval move_window(const MayaDiagram& m) {
    const auto& f = m.flips();
    int lo = f.empty() ? 0 : std::min(f.front(), 0);
    int hi = f.empty() ? 0 : std::max(f.back() + 1, 0);
    return {lo, hi};
}

std::vector<int> labels_with(const MayaDiagram& m, int n, int residue, Bead below, Bead at) {
    std::vector<int> out;
    const Interval w = move_window(m);
    int k = w.lo + residue_mod(residue - w.lo, n);
    for (; k <= w.hi; k += n) {
        if (m.color(k - 1) == below && m.color(k) == at) out.push_back(k);
    }
    return out;
}

}  // namespace

std::vector<int> raising_labels(const MayaDiagram& m, int n, int residue) {
    return labels_with(m, n, residue, Bead::Black, Bead::White);
}

std::vector<int> lowering_labels(const MayaDiagram& m, int n, int residue) {
    return labels_with(m, n, residue, Bead::White, Bead::Black);
}

std::vector<std::pair<MayaDiagram, int>> raising_subsets(const MayaDiagram& m, int n, int residue) {
    const auto labels = raising_labels(m, n, residue);
    std::vector<std::pair<MayaDiagram, int>> out;
    const std::size_t count = std::size_t{1} << labels.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<int> f = m.flips();
        int moved = 0;
        for (std::size_t b = 0; b < labels.size(); ++b) {
            if (!(mask & (std::size_t{1} << b))) continue;
            f.push_back(labels[b] - 1);
            f.push_back(labels[b]);
            ++moved;
        }
        out.emplace_back(MayaDiagram::from_flips(m.kind(), std::move(f)), moved);
    }
    return out;
}

MayaDiagram sigma_shift(const MayaDiagram& m, int shift) {
    std::vector<int> f;
    f.reserve(m.flips().size() + static_cast<std::size_t>(std::abs(shift)));
    for (int k : m.flips()) f.push_back(k + shift);
    // The shifted vacuum differs from the vacuum on [min(0,s), max(0,s)).
    for (int k = std::min(0, shift); k < std::max(0, shift); ++k) f.push_back(k);
    return MayaDiagram::from_flips(m.kind(), std::move(f));
}

MayaDiagram sigma_canonical(const MayaDiagram& m, int n) {
    const int c = m.charge();
    const int target = residue_mod(c, n);
    if (target == c) return m;
    return sigma_shift(m, target - c);
}

MayaDiagram lambda_i(int i) {
    std::vector<int> f;
    for (int k = std::min(0, i); k < std::max(0, i); ++k) f.push_back(k);
    return MayaDiagram::from_flips(Kind::RightBlack, std::move(f));
}

MayaDiagram s_i_lambda_i(int i) { return lambda_i(i).with_toggled(i - 1, i); }

MayaDiagram invert_outside(const MayaDiagram& t, Interval interval) {
    if (t.kind() != Kind::RightBlack) throw std::invalid_argument("invert_outside: expected a right-black diagram");
    if (interval.lo > interval.hi) throw std::invalid_argument("invert_outside: empty interval");
    for (int k : t.flips())
        if (!interval.contains(k)) throw std::invalid_argument("invert_outside: interval does not contain the support");
    // Inside I the left-black flips are exactly the non-flips of t; outside
    // there are none.
    std::vector<int> f;
    f.reserve(static_cast<std::size_t>(interval.width()));
    for (int k = interval.lo; k <= interval.hi; ++k)
        if (!t.is_flipped(k)) f.push_back(k);
    return MayaDiagram::from_flips(Kind::LeftBlack, std::move(f));
}

std::vector<std::vector<int>> partitions_up_to(int max_size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    for (int s = 0; s <= max_size; ++s) rec(s, s);
    return out;
}

std::vector<MayaDiagram> sigma_canonical_diagrams(int n, int max_boxes) {
    const auto parts = partitions_up_to(max_boxes);
    std::vector<MayaDiagram> out;
    out.reserve(parts.size() * static_cast<std::size_t>(n));
    std::size_t begin = 0;
    while (begin < parts.size()) {
        std::size_t end = begin;
        int size = 0;
        for (int x : parts[begin]) size += x;
        for (;; ++end) {
            if (end == parts.size()) break;
            int s = 0;
            for (int x : parts[end]) s += x;
            if (s != size) break;
        }
        for (int c = 0; c < n; ++c)
            for (std::size_t j = begin; j < end; ++j)
                out.push_back(from_partition({parts[j], c, Orientation::Downward}));
        begin = end;
    }
    return out;
}

std::string to_string(const MayaDiagram& m) {
    std::ostringstream os;
    os << (m.kind() == Kind::LeftBlack ? "L" : "R") << "{";
    for (std::size_t i = 0; i < m.flips().size(); ++i) os << (i ? "," : "") << m.flips()[i];
    os << "}";
    return os.str();
}

std::string to_string(const ChargedPartition& p) {
    std::ostringstream os;
    os << "(" << (p.orientation == Orientation::Downward ? "down" : "up") << " c=" << p.charge << " [";
    for (std::size_t i = 0; i < p.parts.size(); ++i) os << (i ? "," : "") << p.parts[i];
    os << "])";
    return os.str();
}

std::string bead_string(const MayaDiagram& m, Interval window) {
    std::string s;
    for (int k = window.hi; k >= window.lo; --k) s += m.color(k) == Bead::Black ? '*' : 'o';
    return s;
}

}  // namespace nss
