#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcnum/diagram.hpp"

namespace arcnum {

/// Parameters of the star diagram S(t,a): 1+(a+1)t chords {h_j, h_{j+2t-1}}
/// over the even indices j.  S(t,a) has arc number a+2.
struct StarParams {
    int t = 1;
    int a = 0;

    int chord_count() const { return 1 + (a + 1) * t; }
    bool operator==(const StarParams&) const = default;
};

/// Certificate that a host diagram contains a star subdiagram: the chords,
/// listed in a star ordering, induce a subdiagram equivalent to
/// make_star(params.t, params.a).
struct StarWitness {
    StarParams params;
    std::vector<std::string> crossings;  // host chord labels, star-ordered
    ChordDiagram host;
};

/// The star S(t,a).  Throws for t < 1 or a < 0.
///
/// For a = 0 the family degenerates: the span 2t-1 is congruent to -3 mod
/// 2t+2, so S(t,0) is a span-3 circulant; S(4,0) coincides with S(2,1) and
/// from t = 4 on the arc number is 3, not a+2.  Parameters are faithful for
/// a >= 1.
ChordDiagram make_star(int t, int a);

/// First `n_chords` crossings of the star ordering of S(t,a) that starts at
/// chord {h_0, h_{2t-1}} and steps by 2t.  Requires 1 <= n_chords <= 1+(a+1)t.
ChordDiagram star_truncation(int t, int a, int n_chords);

/// Truncated star S_a^n, independent of t for n <= (a+1)t; built from the
/// least t with 1+(a+1)t > n.
ChordDiagram make_truncated_star(int a, int n_chords);

/// The (t,a) with d equivalent to make_star(t,a), if any; every
/// factorization of chords-1 is tried.
std::optional<StarParams> is_star(const ChordDiagram& d);

/// Chord labels of d in a star ordering, given that d is equivalent to
/// make_star(p.t, p.a).  Throws std::logic_error if it is not.
std::vector<std::string> star_order_labels(const ChordDiagram& d, StarParams p);

/// Extracts a star subdiagram witness from a diagram of arc number a+2 >= 3:
/// walks f-arcs from a minimal greedy partition around the circle, collecting
/// obstructing crossings until the front half of the newest crossing escapes
/// the inner arc of an earlier one; the escaping stage yields S(x,a) on the
/// last 1+(a+1)x crossings.  Throws std::domain_error when arc number <= 2.
StarWitness extract_star(const ChordDiagram& d);

/// True iff the witness crossings induce a subdiagram of the host whose
/// canonical form equals that of make_star(t,a).  Throws for labels not
/// naming host chords.
bool verify_witness(const StarWitness& w);

}  // namespace arcnum
