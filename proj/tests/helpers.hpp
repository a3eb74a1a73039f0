#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arcnum/diagram.hpp"

// Independent reference routes used to cross-check the library; these stay
// deliberately naive.
namespace testutil {

// Front-maximal end gap by direct walk, one gap at a time.
inline int naive_reach(const arcnum::ChordDiagram& d, int g) {
    const int two_n = d.positions();
    std::vector<char> in(two_n, 0);
    int e = g;
    while (true) {
        const int next = (e + 1) % two_n;
        if (in[d.partner(next)]) break;
        in[next] = 1;
        e = next;
    }
    return e % two_n;
}

// Canonical form by explicit rotation enumeration through the public
// rotation + emission path.
inline std::string min_rotation_word(const arcnum::ChordDiagram& d) {
    if (d.positions() == 0) return "";
    std::string best = arcnum::to_gauss_word(d);
    for (int r = 1; r < d.positions(); ++r)
        best = std::min(best, arcnum::to_gauss_word(arcnum::rotated(d, r)));
    return best;
}

inline bool is_cyclic_rotation(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < a.size() && match; ++i)
            match = a[(i + shift) % a.size()] == b[i];
        if (match) return true;
    }
    return false;
}

}  // namespace testutil
