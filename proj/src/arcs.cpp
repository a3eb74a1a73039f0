#include "arcnum/arcs.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace arcnum {

namespace {

// Forward gap distance from g to `start`, in [1, 2n]: the number of steps a
// walk from gap g takes to land on the start gap again.
int distance_to_start(int g, int start, int two_n) {
    return ((start - g - 1) % two_n + two_n) % two_n + 1;
}

int span_of(int g, int e, int two_n) { return ((e - g) % two_n + two_n) % two_n; }

// Cut count of the greedy pass from `start`, without building the partition.
int greedy_cut_count(const std::vector<int>& reach, int start, int two_n) {
    int count = 1;
    int g = start;
    while (true) {
        const int e = reach[g];
        if (span_of(g, e, two_n) >= distance_to_start(g, start, two_n)) return count;
        ++count;
        g = e;
    }
}

ObstructedArc make_obstructed(const ChordDiagram& d, int g, int e) {
    const int two_n = d.positions();
    ObstructedArc rec;
    rec.start = g;
    rec.end = e;
    rec.front = (e + 1) % two_n;
    rec.back = d.partner(rec.front);
    // the chord completing just past the f-arc must have its other half inside
    if (!rec.f_arc(two_n).contains(rec.back))
        throw std::logic_error("obstructing crossing has no back half inside the f-arc");
    return rec;
}

int best_start(const ChordDiagram& d, const std::vector<int>& reach) {
    const int two_n = d.positions();
    int best = std::numeric_limits<int>::max();
    int best_gap = 0;
    for (int s = 0; s < two_n; ++s) {
        const int count = greedy_cut_count(reach, s, two_n);
        if (count < best) {
            best = count;
            best_gap = s;
        }
    }
    return best_gap;
}

}  // namespace

std::vector<int> sorted_cuts(const Partition& p) {
    std::vector<int> cuts = p.cuts;
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

std::vector<int> reach_table(const ChordDiagram& d) {
    const int two_n = d.positions();
    if (two_n == 0) throw std::invalid_argument("reach table of the empty diagram");

    std::vector<int> reach(two_n);
    std::vector<char> in_window(two_n, 0);

    // Window (g, r] of positions, with r kept unwrapped so it never moves
    // backward; r == g encodes the empty window.  Amortized O(n) sweep.
    int r = 0;
    for (int g = 0; g < two_n; ++g) {
        if (g > 0) {
            if (r == g - 1) {
                r = g;  // window was empty; stays empty
            } else {
                in_window[g % two_n] = 0;  // drop the old first position
            }
        }
        while (true) {
            const int next = (r + 1) % two_n;
            if (in_window[d.partner(next)]) break;  // extension completes a chord
            in_window[next] = 1;
            ++r;
        }
        reach[g] = r % two_n;
    }
    return reach;
}

GreedyResult greedy_partition(const ChordDiagram& d, int start_gap) {
    return greedy_partition(d, start_gap, reach_table(d));
}

GreedyResult greedy_partition(const ChordDiagram& d, int start_gap,
                              const std::vector<int>& reach) {
    const int two_n = d.positions();
    if (two_n == 0) throw std::invalid_argument("greedy partition of the empty diagram");
    if (start_gap < 0 || start_gap >= two_n)
        throw std::out_of_range("start gap out of range");

    GreedyResult out;
    out.partition.cuts.push_back(start_gap);
    int g = start_gap;
    while (true) {
        const int e = reach[g];
        if (span_of(g, e, two_n) >= distance_to_start(g, start_gap, two_n)) break;
        out.arcs.push_back(make_obstructed(d, g, e));
        out.partition.cuts.push_back(e);
        g = e;
    }
    return out;
}

int arc_number(const ChordDiagram& d) {
    const int two_n = d.positions();
    if (two_n == 0) return 1;
    const std::vector<int> reach = reach_table(d);
    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < two_n; ++s)
        best = std::min(best, greedy_cut_count(reach, s, two_n));
    return best;
}

GreedyResult minimal_greedy_partition(const ChordDiagram& d) {
    const std::vector<int> reach = reach_table(d);
    return greedy_partition(d, best_start(d, reach), reach);
}

Partition minimal_partition(const ChordDiagram& d) {
    if (d.positions() == 0) return Partition{{0}};
    return minimal_greedy_partition(d).partition;
}

bool is_embedded_partition(const ChordDiagram& d, const std::vector<int>& cuts) {
    if (cuts.empty()) throw std::invalid_argument("cut set must be nonempty");
    for (int g : cuts) {
        if (g < 0 || g >= d.gaps()) throw std::out_of_range("cut gap out of range");
    }
    const int two_n = d.positions();
    if (two_n == 0) return true;

    std::vector<int> sorted = cuts;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // A single cut leaves one arc holding the entire circle.
    if (sorted.size() == 1) return false;

    // Position p lies in the arc ending at the least cut >= p (wrapping to
    // the first cut past the last one).
    auto arc_of = [&](int p) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
        return it == sorted.end() ? 0 : static_cast<int>(it - sorted.begin());
    };
    for (int p = 0; p < two_n; ++p) {
        const int q = d.partner(p);
        if (p < q && arc_of(p) == arc_of(q)) return false;
    }
    return true;
}

ObstructedArc obstructing_crossing(const ChordDiagram& d, int start_gap) {
    return obstructing_crossing(d, start_gap, reach_table(d));
}

ObstructedArc obstructing_crossing(const ChordDiagram& d, int start_gap,
                                   const std::vector<int>& reach) {
    if (d.positions() == 0)
        throw std::invalid_argument("obstructing crossing of the empty diagram");
    if (start_gap < 0 || start_gap >= d.positions())
        throw std::out_of_range("start gap out of range");
    return make_obstructed(d, start_gap, reach[start_gap]);
}

}  // namespace arcnum
