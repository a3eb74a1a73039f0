#include "arcnum/stars.hpp"

#include <stdexcept>
#include <utility>

#include "arcnum/arcs.hpp"

namespace arcnum {

namespace {

// Chord h-indices (all even) of the star ordering of S(t,a) starting at c_0.
// The stride-2t orbit covers all chords because gcd(1+(a+1)t, t) = 1.
std::vector<int> star_order_indices(StarParams p) {
    const int two_m = 2 * p.chord_count();
    std::vector<int> order(p.chord_count());
    int j = 0;
    for (int i = 0; i < p.chord_count(); ++i) {
        order[i] = j;
        j = (j + 2 * p.t) % two_m;
    }
    return order;
}

void check_params(int t, int a) {
    if (t < 1) throw std::invalid_argument("star parameter t must be >= 1");
    if (a < 0) throw std::invalid_argument("star parameter a must be >= 0");
}

}  // namespace

ChordDiagram make_star(int t, int a) {
    check_params(t, a);
    const int two_m = 2 * (1 + (a + 1) * t);
    std::vector<int> partner(two_m);
    for (int j = 0; j < two_m; j += 2) {
        const int k = (j + 2 * t - 1) % two_m;
        partner[j] = k;
        partner[k] = j;
    }
    return ChordDiagram::from_partner(std::move(partner));
}

ChordDiagram star_truncation(int t, int a, int n_chords) {
    check_params(t, a);
    const StarParams p{t, a};
    if (n_chords < 1 || n_chords > p.chord_count())
        throw std::invalid_argument("truncation length out of range");
    const ChordDiagram star = make_star(t, a);
    std::vector<std::string> keep;
    const std::vector<int> order = star_order_indices(p);
    for (int i = 0; i < n_chords; ++i) keep.push_back(star.label(order[i]));
    return subdiagram(star, keep).diagram;
}

ChordDiagram make_truncated_star(int a, int n_chords) {
    if (a < 0) throw std::invalid_argument("star parameter a must be >= 0");
    if (n_chords < 1) throw std::invalid_argument("truncation length must be >= 1");
    const int t = (n_chords + a) / (a + 1);  // least t with 1+(a+1)t > n
    return star_truncation(t, a, n_chords);
}

std::optional<StarParams> is_star(const ChordDiagram& d) {
    const int m = d.chords();
    if (m < 2) return std::nullopt;
    const std::string canon = canonical_form(d);
    for (int t = 1; t < m; ++t) {
        if ((m - 1) % t != 0) continue;
        const StarParams p{t, (m - 1) / t - 1};
        if (canonical_form(make_star(p.t, p.a)) == canon) return p;
    }
    return std::nullopt;
}

std::vector<std::string> star_order_labels(const ChordDiagram& d, StarParams p) {
    if (d.chords() != p.chord_count())
        throw std::logic_error("diagram has the wrong chord count for the star");
    const ChordDiagram star = make_star(p.t, p.a);
    const int two_m = d.positions();
    const std::string want = to_gauss_word(d);

    // Find a rotation aligning the star with d; one exists iff d ~ S(t,a).
    for (int r = 0; r < two_m; ++r) {
        if (to_gauss_word(rotated(star, r)) != want) continue;
        // star position s corresponds to d position (s - r) mod 2m
        std::vector<std::string> labels;
        for (int j : star_order_indices(p))
            labels.push_back(d.label(((j - r) % two_m + two_m) % two_m));
        return labels;
    }
    throw std::logic_error("diagram is not equivalent to the requested star");
}

StarWitness extract_star(const ChordDiagram& d) {
    const int number = arc_number(d);
    if (number < 3)
        throw std::domain_error("no star subdiagram: arc number is " +
                                std::to_string(number));
    const int a = number - 2;
    const int two_n = d.positions();
    const std::vector<int> reach = reach_table(d);

    // First lap: the f-arcs of a minimal greedy partition supply crossings
    // c_1..c_{a+1}; the closing arc contributes none.
    GreedyResult greedy = minimal_greedy_partition(d);
    std::vector<ObstructedArc> seq = std::move(greedy.arcs);

    std::vector<char> seen(d.chords(), 0);
    for (const ObstructedArc& rec : seq) {
        char& mark = seen[d.chord_index(rec.back)];
        if (mark) throw std::logic_error("duplicate obstructing crossing");
        mark = 1;
    }

    // Continue around the circle, wrapping as needed.  All obstructing
    // crossings stay distinct, so n stages bound the walk.
    int g = greedy.partition.cuts.back();
    for (int k = static_cast<int>(seq.size()) + 1; k <= d.chords(); ++k) {
        const ObstructedArc rec = obstructing_crossing(d, g, reach);
        char& mark = seen[d.chord_index(rec.back)];
        if (mark) throw std::logic_error("duplicate obstructing crossing");
        mark = 1;
        seq.push_back(rec);

        for (int x = 1; k - x * (a + 1) >= 1; ++x) {
            const ObstructedArc& anchor = seq[k - x * (a + 1) - 1];
            if (anchor.inner_arc(two_n).contains(rec.front)) continue;
            // least escaping x: crossings c_{k-x(a+1)}..c_k form S(x,a)
            StarWitness w;
            w.params = StarParams{x, a};
            w.host = d;
            for (int i = k - x * (a + 1) - 1; i < k; ++i)
                w.crossings.push_back(d.label(seq[i].back));
            if (!verify_witness(w))
                throw std::logic_error("extracted star witness failed verification");
            return w;
        }
        g = rec.end;
    }
    throw std::logic_error("star extraction exceeded the stage cap");
}

bool verify_witness(const StarWitness& w) {
    const Subdiagram sub = subdiagram(w.host, w.crossings);
    return canonical_form(sub.diagram) ==
           canonical_form(make_star(w.params.t, w.params.a));
}

}  // namespace arcnum
