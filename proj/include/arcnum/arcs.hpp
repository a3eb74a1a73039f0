#pragma once

#include <vector>

#include "arcnum/diagram.hpp"

namespace arcnum {

/// An embedded partition: cut gaps in cyclic order.  The complementary arcs
/// between consecutive cuts cover every position exactly once, so the number
/// of arcs equals the number of cuts.
struct Partition {
    std::vector<int> cuts;

    int arc_count() const { return static_cast<int>(cuts.size()); }
};

/// Cut gaps in ascending order, the serialization order for output.
std::vector<int> sorted_cuts(const Partition& p);

/// A front-maximal properly embedded arc (f-arc) together with the crossing
/// that blocks further front extension.
struct ObstructedArc {
    int start = 0;  // f-arc is (start, end] as gaps
    int end = 0;
    int back = 0;   // back half-crossing b(c), a position inside the arc
    int front = 0;  // front half-crossing f(c) = end+1 mod 2n; partner of back

    CircularArc f_arc(int two_n) const { return {start, end, two_n}; }
    /// The properly embedded sub-arc from b(c) to just before f(c).
    CircularArc inner_arc(int two_n) const {
        return {back, ((front - 1) % two_n + two_n) % two_n, two_n};
    }
};

/// reach[g] is the gap e such that the arc (g, e] is properly embedded and
/// cannot be front-extended: adding position e+1 would complete a chord.
/// Computed by a single two-pointer sweep, O(n) total.  Throws on the empty
/// diagram.
std::vector<int> reach_table(const ChordDiagram& d);

struct GreedyResult {
    Partition partition;
    /// One record per f-arc; the final closing arc has no record, so this
    /// holds one entry fewer than `partition.cuts`.
    std::vector<ObstructedArc> arcs;
};

/// Greedy embedded partition: cuts start at `start_gap`, each next cut is the
/// reach of the previous one, stopping once the next f-arc covers or passes
/// the start gap.  Requires n >= 1.
GreedyResult greedy_partition(const ChordDiagram& d, int start_gap);
GreedyResult greedy_partition(const ChordDiagram& d, int start_gap,
                              const std::vector<int>& reach);

/// Minimum number of arcs over all embedded partitions; 1 for the empty
/// diagram by convention.  Takes the minimum of the 2n greedy passes, O(n^2).
int arc_number(const ChordDiagram& d);

/// The greedy partition achieving arc_number(d), ties among start gaps broken
/// by least start index.
Partition minimal_partition(const ChordDiagram& d);
GreedyResult minimal_greedy_partition(const ChordDiagram& d);

/// True iff no complementary arc between cyclically consecutive cuts contains
/// both positions of any chord.  Cuts must be nonempty and in range.
bool is_embedded_partition(const ChordDiagram& d, const std::vector<int>& cuts);

/// The f-arc starting after `start_gap` with its obstructing crossing.
ObstructedArc obstructing_crossing(const ChordDiagram& d, int start_gap);
ObstructedArc obstructing_crossing(const ChordDiagram& d, int start_gap,
                                   const std::vector<int>& reach);

}  // namespace arcnum
