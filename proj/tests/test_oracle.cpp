#include <doctest.h>

#include <set>
#include <stdexcept>

#include "arcnum/oracle.hpp"
#include "arcnum/stars.hpp"

using arcnum::ChordDiagram;

TEST_CASE("enumerate_diagrams yields every perfect matching") {
    CHECK(arcnum::enumerate_diagrams(0).size() == 1);
    CHECK(arcnum::enumerate_diagrams(1).size() == 1);
    CHECK(arcnum::enumerate_diagrams(2).size() == 3);
    CHECK(arcnum::enumerate_diagrams(3).size() == 15);
    CHECK(arcnum::enumerate_diagrams(4).size() == 105);
    CHECK(arcnum::enumerate_diagrams(5).size() == 945);
    CHECK_THROWS_AS(arcnum::enumerate_diagrams(7), std::invalid_argument);

    std::set<std::string> words;
    for (const ChordDiagram& d : arcnum::enumerate_diagrams(2))
        words.insert(arcnum::to_gauss_word(d));
    CHECK(words == std::set<std::string>{"AABB", "ABAB", "ABBA"});
}

TEST_CASE("deduplicated census keeps one diagram per canonical form") {
    const auto raw = arcnum::enumerate_diagrams(3);
    const auto unique = arcnum::enumerate_diagrams(3, true);
    CHECK(unique.size() < raw.size());
    std::set<std::string> canon;
    for (const ChordDiagram& d : unique)
        CHECK(canon.insert(arcnum::canonical_form(d)).second);
    for (const ChordDiagram& d : raw)
        CHECK(canon.count(arcnum::canonical_form(d)) == 1);
}

TEST_CASE("brute_force_arc_number searches cut subsets by size") {
    CHECK(arcnum::brute_force_arc_number(arcnum::parse_gauss_word("AABBCC")) == 3);
    CHECK(arcnum::brute_force_arc_number(arcnum::parse_gauss_word("ABCABC")) == 2);
    CHECK(arcnum::brute_force_arc_number(arcnum::parse_gauss_word("AA")) == 2);
    CHECK(arcnum::brute_force_arc_number(ChordDiagram()) == 1);
    CHECK_THROWS_AS(arcnum::brute_force_arc_number(arcnum::random_diagram(9, 1)),
                    std::invalid_argument);
}

TEST_CASE("brute_force_find_star scans subset sizes smallest t first") {
    const auto w = arcnum::brute_force_find_star(arcnum::make_star(2, 1), 1);
    REQUIRE(w.has_value());
    CHECK(w->params.t == 2);
    CHECK(arcnum::verify_witness(*w));

    CHECK_FALSE(arcnum::brute_force_find_star(arcnum::parse_gauss_word("ABAB"), 1));

    const auto contained = arcnum::brute_force_find_star(arcnum::make_star(1, 2), 1);
    REQUIRE(contained.has_value());
    CHECK(contained->params.t == 1);

    CHECK_THROWS_AS(arcnum::brute_force_find_star(arcnum::make_star(1, 1), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(arcnum::brute_force_find_star(arcnum::random_diagram(9, 1), 1),
                    std::invalid_argument);
}

TEST_CASE("random_diagram is deterministic per seed") {
    CHECK(arcnum::random_diagram(0, 3).positions() == 0);
    const ChordDiagram a = arcnum::random_diagram(3, 1);
    const ChordDiagram b = arcnum::random_diagram(3, 1);
    CHECK(a.partner_map() == b.partner_map());
    const ChordDiagram c = arcnum::random_diagram(3, 2);
    CHECK(a.partner_map() != c.partner_map());
    const ChordDiagram big = arcnum::random_diagram(5, 7);
    for (int p = 0; p < big.positions(); ++p) {
        CHECK(big.partner(big.partner(p)) == p);
        CHECK(big.partner(p) != p);
    }
}
