#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace arcnum {

/// Undecorated chord diagram: 2n half-crossing positions 0..2n-1 in circular
/// order on an oriented circle, paired into n chords by a fixed-point-free
/// involution.  Immutable after construction; all index arithmetic is mod 2n.
class ChordDiagram {
public:
    ChordDiagram() = default;  // the empty diagram (n = 0)

    /// Builds a diagram from a partner involution.  Labels, when omitted,
    /// default to letters (decimal tokens for n > 26) by first occurrence.
    /// Throws std::invalid_argument if `partner` is not a fixed-point-free
    /// involution or labels are inconsistent with the chords.
    static ChordDiagram from_partner(std::vector<int> partner);
    static ChordDiagram from_partner(std::vector<int> partner,
                                     std::vector<std::string> labels);

    int chords() const { return static_cast<int>(partner_.size() / 2); }
    int positions() const { return static_cast<int>(partner_.size()); }
    /// Number of gaps between adjacent positions; the empty diagram has one
    /// gap (index 0) by convention.
    int gaps() const { return partner_.empty() ? 1 : positions(); }

    int partner(int pos) const { return partner_[pos]; }
    const std::string& label(int pos) const { return labels_[pos]; }
    /// 0-based chord index in order of first occurrence around the circle.
    int chord_index(int pos) const { return chord_of_[pos]; }
    /// Label of each chord, indexed by chord_index.
    const std::vector<std::string>& chord_labels() const { return chord_labels_; }
    const std::vector<int>& partner_map() const { return partner_; }

private:
    std::vector<int> partner_;
    std::vector<std::string> labels_;       // per position; both ends agree
    std::vector<int> chord_of_;             // per position
    std::vector<std::string> chord_labels_; // per chord
};

/// Gap g is the open arc between position g and position g+1 (mod 2n); cut
/// points live in gaps.  A CircularArc holds the positions strictly after
/// gap `start` up to and including gap `end`, i.e. {start+1, ..., end}
/// walking in the preferred orientation.  start == end denotes the empty arc.
struct CircularArc {
    int start = 0;    // gap index
    int end = 0;      // gap index
    int modulus = 0;  // 2n

    bool contains(int pos) const {
        const int off = ((pos - start) % modulus + modulus) % modulus;
        return off >= 1 && off <= length();
    }
    /// Number of positions in the arc.
    int length() const { return ((end - start) % modulus + modulus) % modulus; }
};

inline bool arc_contains_position(const CircularArc& arc, int pos) {
    return arc.contains(pos);
}

/// Parses a Gauss word: either consecutive single uppercase letters
/// ("ABAB") or whitespace/comma-separated alphanumeric tokens ("1 2 1 2").
/// Every token must appear exactly twice.  Empty text gives the empty
/// diagram.  Throws std::invalid_argument naming the offending token.
ChordDiagram parse_gauss_word(std::string_view text);

/// Emits one token per position, chords relabeled A, B, C, ... in order of
/// first occurrence (decimal tokens separated by spaces for n > 26).
std::string to_gauss_word(const ChordDiagram& d);

/// Lexicographically least word over all 2n rotations, each relabeled by
/// first occurrence.  Two diagrams are equivalent iff their canonical forms
/// are equal.
std::string canonical_form(const ChordDiagram& d);

bool is_equivalent(const ChordDiagram& a, const ChordDiagram& b);

/// The diagram read starting from position r: new position i is old
/// position (i + r) mod 2n.  Labels are carried over.
ChordDiagram rotated(const ChordDiagram& d, int r);

struct Subdiagram {
    ChordDiagram diagram;
    std::vector<int> position_map;  // new position -> host position
};

/// Induced subdiagram on the named chords, in inherited cyclic order.
/// Throws std::invalid_argument for an unknown chord label.
Subdiagram subdiagram(const ChordDiagram& d, const std::vector<std::string>& chords);

}  // namespace arcnum
