#include "arcnum/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "arcnum/arcs.hpp"

namespace arcnum {

namespace {

// Visits every k-combination of {0..total-1} in lexicographic order until
// the visitor returns true; reports whether any did.
template <typename Visit>
bool for_each_combination(int total, int k, Visit visit) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        if (visit(pick)) return true;
        int i = k - 1;
        while (i >= 0 && pick[i] == total - k + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

void check_size_guard(const ChordDiagram& d) {
    if (d.chords() > kMaxBruteForceChords)
        throw std::invalid_argument("brute-force oracle limited to n <= " +
                                    std::to_string(kMaxBruteForceChords));
}

void enumerate_matchings(std::vector<int>& partner, int two_n,
                         std::vector<ChordDiagram>& out) {
    int p = 0;
    while (p < two_n && partner[p] >= 0) ++p;
    if (p == two_n) {
        out.push_back(ChordDiagram::from_partner(partner));
        return;
    }
    for (int q = p + 1; q < two_n; ++q) {
        if (partner[q] >= 0) continue;
        partner[p] = q;
        partner[q] = p;
        enumerate_matchings(partner, two_n, out);
        partner[p] = -1;
        partner[q] = -1;
    }
}

}  // namespace

int brute_force_arc_number(const ChordDiagram& d) {
    check_size_guard(d);
    if (d.chords() == 0) return 1;
    const int gaps = d.gaps();
    for (int k = 1; k <= gaps; ++k) {
        const bool found = for_each_combination(gaps, k, [&](const std::vector<int>& cuts) {
            return is_embedded_partition(d, cuts);
        });
        if (found) return k;
    }
    throw std::logic_error("no embedded partition found");  // unreachable: all gaps cut is valid
}

std::optional<StarWitness> brute_force_find_star(const ChordDiagram& d, int a) {
    if (a < 1) throw std::invalid_argument("star search requires a >= 1");
    check_size_guard(d);
    const int n = d.chords();
    for (int t = 1; 1 + (a + 1) * t <= n; ++t) {
        const StarParams params{t, a};
        const std::string star_canon = canonical_form(make_star(t, a));
        std::optional<StarWitness> witness;
        for_each_combination(n, params.chord_count(), [&](const std::vector<int>& pick) {
            std::vector<std::string> labels;
            for (int c : pick) labels.push_back(d.chord_labels()[c]);
            const Subdiagram sub = subdiagram(d, labels);
            if (canonical_form(sub.diagram) != star_canon) return false;
            witness = StarWitness{params, star_order_labels(sub.diagram, params), d};
            return true;
        });
        if (witness) return witness;
    }
    return std::nullopt;
}

std::vector<ChordDiagram> enumerate_diagrams(int n, bool dedupe) {
    if (n < 0 || n > kMaxCensusChords)
        throw std::invalid_argument("census limited to 0 <= n <= " +
                                    std::to_string(kMaxCensusChords));
    std::vector<ChordDiagram> out;
    std::vector<int> partner(2 * n, -1);
    enumerate_matchings(partner, 2 * n, out);
    if (dedupe) {
        std::set<std::string> seen;
        std::vector<ChordDiagram> unique;
        for (const ChordDiagram& d : out) {
            if (seen.insert(canonical_form(d)).second) unique.push_back(d);
        }
        out = std::move(unique);
    }
    return out;
}

ChordDiagram random_diagram(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("chord count must be >= 0");
    std::mt19937_64 rng(seed);
    std::vector<int> order(2 * n);
    for (int i = 0; i < 2 * n; ++i) order[i] = i;
    // Fisher-Yates with a plain modulo draw; fixed here so the stream is
    // reproducible for a given seed.
    for (int i = 2 * n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[i], order[j]);
    }
    std::vector<int> partner(2 * n);
    for (int i = 0; i < n; ++i) {
        partner[order[2 * i]] = order[2 * i + 1];
        partner[order[2 * i + 1]] = order[2 * i];
    }
    return ChordDiagram::from_partner(std::move(partner));
}

}  // namespace arcnum
