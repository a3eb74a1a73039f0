#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arcnum/diagram.hpp"
#include "arcnum/stars.hpp"

namespace arcnum {

// Size guards keeping all exhaustive searches at desk scale.
inline constexpr int kMaxBruteForceChords = 8;
inline constexpr int kMaxCensusChords = 6;

/// Reference arc number by exhaustive search: the least k such that some
/// k-subset of the 2n gaps is an embedded partition.  Deliberately naive and
/// independent of the greedy algorithm.  Requires n <= 8.
int brute_force_arc_number(const ChordDiagram& d);

/// Reference star search: scans every chord subset of star cardinality
/// 1+(a+1)t, smallest t first, and returns the first subset whose induced
/// subdiagram is equivalent to S(t,a).  Requires a >= 1 and n <= 8.
std::optional<StarWitness> brute_force_find_star(const ChordDiagram& d, int a);

/// Every perfect matching of 2n labeled positions, (2n-1)!! diagrams in a
/// fixed recursive order; with dedupe, one representative per canonical
/// form.  Requires n <= 6.
std::vector<ChordDiagram> enumerate_diagrams(int n, bool dedupe = false);

/// Uniform random diagram from a seeded generator (mt19937_64 driving a
/// Fisher-Yates shuffle of the positions, paired consecutively).  Same seed
/// and n reproduce the same diagram.
ChordDiagram random_diagram(int n, std::uint64_t seed);

}  // namespace arcnum
