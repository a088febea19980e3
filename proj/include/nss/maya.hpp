#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nss {

// Beads sit at half-integer positions; a bead is addressed by its integer
// slot label k, which lives at position k + 0.5.
enum class Kind : std::uint8_t { LeftBlack, RightBlack };
enum class Bead : std::uint8_t { White, Black };
enum class Orientation : std::uint8_t { Downward, Upward };

struct Interval {
    int lo = 0;
    int hi = 0;

    bool contains(int label) const { return lo <= label && label <= hi; }
    int width() const { return hi - lo + 1; }
};

/// A Maya diagram stored as the finite set of slots whose bead differs from
/// the charge-zero vacuum of its kind.
///
/// Left-black vacuum: black at labels >= 0, white at labels < 0.
/// Right-black vacuum (= Lambda_0): black at labels < 0, white at labels >= 0.
/// The two vacua are color inversions of each other, so color inversion keeps
/// the flip set and only switches the kind.
class MayaDiagram {
public:
    MayaDiagram() = default;

    static MayaDiagram vacuum(Kind kind) { return MayaDiagram(kind, {}); }
    /// Labels listed an even number of times cancel.
    static MayaDiagram from_flips(Kind kind, std::vector<int> flips);

    Kind kind() const { return kind_; }
    const std::vector<int>& flips() const { return flips_; }
    bool is_flipped(int label) const;

    Bead color(int label) const;
    Bead vacuum_color(int label) const;

    /// #(white at labels >= 0) - #(black at labels < 0), read on the
    /// left-black member of the inversion pair. The charge-c left-black
    /// vacuum is black exactly at labels >= c.
    int charge() const;

    /// Number of boxes of the associated charged partition.
    int box_count() const;

    /// Labels between which all non-vacuum behaviour happens: every bead
    /// outside [lo, hi] has its vacuum color.
    Interval support_hull() const;

    MayaDiagram inverted() const;
    MayaDiagram with_toggled(int a, int b) const;

    std::size_t hash() const;

    friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;
    friend std::strong_ordering operator<=>(const MayaDiagram& a, const MayaDiagram& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
        return a.flips_ <=> b.flips_;
    }

private:
    MayaDiagram(Kind kind, std::vector<int> flips) : kind_(kind), flips_(std::move(flips)) {}

    Kind kind_ = Kind::LeftBlack;
    std::vector<int> flips_;
};

struct MayaHash {
    std::size_t operator()(const MayaDiagram& m) const { return m.hash(); }
};

struct ChargedPartition {
    std::vector<int> parts;
    int charge = 0;
    Orientation orientation = Orientation::Downward;

    bool valid() const;
    int size() const;

    friend bool operator==(const ChargedPartition&, const ChargedPartition&) = default;
};

struct BoxRef {
    int row = 0;
    int col = 0;
    int label = 0;
    int residue = 0;

    friend bool operator==(const BoxRef&, const BoxRef&) = default;
};

inline int residue_mod(int value, int n) {
    int r = value % n;
    return r < 0 ? r + n : r;
}

/// Downward partitions map to left-black diagrams, upward ones to right-black.
MayaDiagram from_partition(const ChargedPartition& p);
ChargedPartition to_partition(const MayaDiagram& m);

/// Slot label of box (row, col), both 1-based: charge + col - row.
/// Throws std::out_of_range when the box is not in the partition.
int box_slot_label(int row, int col, const ChargedPartition& p);

std::vector<BoxRef> removable_boxes(const ChargedPartition& p, int n, int residue);
std::vector<BoxRef> addable_boxes(const ChargedPartition& p, int n, int residue);

/// Every partition obtained by deleting a subset of the removable boxes of the
/// given residue; the first entry is p itself.
std::vector<ChargedPartition> removal_subsets(const ChargedPartition& p, int n, int residue);

// Bead moves. A residue-i Chevalley raising step moves a black bead from
// slot k-1 to slot k with k = i (mod n). On a left-black diagram this removes
// a box; on a right-black diagram it adds a box to the upward partition.
std::vector<int> raising_labels(const MayaDiagram& m, int n, int residue);
std::vector<int> lowering_labels(const MayaDiagram& m, int n, int residue);
inline MayaDiagram move_bead(const MayaDiagram& m, int label) { return m.with_toggled(label - 1, label); }

/// Diagrams reached from m by performing any subset of the residue raising
/// moves available on m, together with the subset size. The first entry is
/// (m, 0). Moves of one residue never interact when n >= 2.
std::vector<std::pair<MayaDiagram, int>> raising_subsets(const MayaDiagram& m, int n, int residue);

/// Translate every bead by `shift` slots.
MayaDiagram sigma_shift(const MayaDiagram& m, int shift);
/// Representative of the sigma-orbit (shifts by multiples of n) with charge in [0, n).
MayaDiagram sigma_canonical(const MayaDiagram& m, int n);

/// Right-black diagram with black beads exactly at labels < i.
MayaDiagram lambda_i(int i);
/// lambda_i(i) with the beads at labels i-1 and i exchanged.
MayaDiagram s_i_lambda_i(int i);

/// The left-black diagram agreeing with t on I and color-inverted outside.
/// Throws std::invalid_argument if t is not right-black, or I misses a flip of t.
MayaDiagram invert_outside(const MayaDiagram& t, Interval interval);

/// All partitions of size <= max_size, ordered by size then reverse
/// lexicographically within a size.
std::vector<std::vector<int>> partitions_up_to(int max_size);

/// Sigma-canonical left-black diagrams with <= max_boxes boxes, in a fixed
/// order: by box count, then charge, then partition.
std::vector<MayaDiagram> sigma_canonical_diagrams(int n, int max_boxes);

std::string to_string(const MayaDiagram& m);
std::string to_string(const ChargedPartition& p);
/// Bead picture of slots hi..lo, highest label first as in the usual figures.
std::string bead_string(const MayaDiagram& m, Interval window);

}  // namespace nss
