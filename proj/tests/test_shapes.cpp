#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "pedlab/corpus.hpp"
#include "pedlab/errors.hpp"
#include "pedlab/shapes.hpp"

using namespace pedlab;

TEST_CASE("partition basics") {
    Partition lam({3, 2});
    CHECK(lam.rows() == 2);
    CHECK(lam.total() == 5);
    CHECK(lam.part(1) == 3);
    CHECK(lam.part(2) == 2);
    CHECK(lam.part(3) == 0);
    CHECK(Partition{}.total() == 0);
    CHECK(Partition({3, 2, 0, 0}) == lam);
    CHECK_THROWS_AS(Partition({2, 3}), InvalidShape);
    CHECK_THROWS_AS(Partition({1, -1}), InvalidShape);
}

TEST_CASE("partition conjugate and containment") {
    CHECK(Partition({3, 2}).conjugate() == Partition({2, 2, 1}));
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition({3, 2}).contains(Partition({1})));
    CHECK(Partition({3, 2}).contains(Partition({3, 2})));
    CHECK_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
    CHECK_FALSE(Partition({3, 2}).contains(Partition({4})));
}

TEST_CASE("shape parsing") {
    SkewShape s = SkewShape::parse("3,2");
    CHECK(s.outer() == Partition({3, 2}));
    CHECK(s.inner() == Partition{});

    SkewShape t = SkewShape::parse("3,2/1");
    CHECK(t.outer() == Partition({3, 2}));
    CHECK(t.inner() == Partition({1}));

    CHECK(SkewShape::parse("3,2,0") == s);

    CHECK_THROWS_AS(SkewShape::parse("2,3"), InvalidShape);
    CHECK_THROWS_AS(SkewShape::parse("3,2/3,3"), InvalidShape);
    CHECK_THROWS_AS(SkewShape::parse("3,,2"), ParseError);
    CHECK_THROWS_AS(SkewShape::parse("abc"), ParseError);
    CHECK_THROWS_AS(SkewShape::parse(""), ParseError);
    CHECK_THROWS_AS(SkewShape::parse("3,2/1/1"), ParseError);
}

TEST_CASE("shape text round trip") {
    for (const char* text : {"3,2", "3,2/1", "4,4,2/2,1", "1"}) {
        SkewShape s = SkewShape::parse(text);
        CHECK(s.to_text() == text);
        CHECK(SkewShape::parse(s.to_text()) == s);
    }
    CHECK(SkewShape{}.to_text() == "");
}

TEST_CASE("cells in reading order") {
    std::vector<Cell> c = SkewShape::parse("3,2").cells();
    CHECK(c == std::vector<Cell>{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}});

    CHECK(SkewShape::parse("2,1/1").cells() == std::vector<Cell>{{2, 1}, {1, 2}});

    CHECK(SkewShape(Partition({2, 1}), Partition({2, 1})).cells().empty());
    CHECK(SkewShape{}.num_cells() == 0);
}

TEST_CASE("cell membership") {
    SkewShape s = SkewShape::parse("3,2/1");
    CHECK(s.contains_cell({2, 1}));
    CHECK(s.contains_cell({1, 2}));
    CHECK_FALSE(s.contains_cell({1, 1}));
    CHECK_FALSE(s.contains_cell({3, 2}));
    CHECK_FALSE(s.contains_cell({0, 1}));
}

TEST_CASE("conjugation") {
    CHECK(SkewShape::parse("3,2").conjugate() == SkewShape::parse("2,2,1"));
    CHECK(SkewShape::parse("2,1").conjugate() == SkewShape::parse("2,1"));
    CHECK(SkewShape::parse("2,1/1").conjugate() == SkewShape::parse("2,1/1"));

    for (const SkewShape& s : all_skew_shapes(5)) {
        CHECK(s.conjugate().conjugate() == s);
        CHECK(s.conjugate().num_cells() == s.num_cells());
    }
}

TEST_CASE("cell count is the partition difference") {
    for (const SkewShape& s : all_skew_shapes(6)) {
        CHECK(s.num_cells() == s.outer().total() - s.inner().total());
        CHECK(static_cast<int>(s.cells().size()) == s.num_cells());
        for (const Cell& c : s.cells()) CHECK(s.contains_cell(c));
    }
}

TEST_CASE("shape corpus enumeration") {
    CHECK(all_partitions(0).size() == 1);
    CHECK(all_partitions(4).size() == 1 + 1 + 2 + 3 + 5);
    CHECK(sub_partitions(Partition({2, 1})).size() == 5);
    for (const Partition& mu : sub_partitions(Partition({3, 2})))
        CHECK(Partition({3, 2}).contains(mu));
}
