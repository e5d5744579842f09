#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "pedlab/corpus.hpp"
#include "pedlab/errors.hpp"
#include "pedlab/rsk.hpp"
#include "pedlab/shapes.hpp"
#include "pedlab/tableaux.hpp"

using namespace pedlab;

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<SkewShape> straight_shapes(int max_cells) {
    std::vector<SkewShape> out;
    for (const Partition& lam : all_partitions(max_cells))
        if (lam.total() > 0) out.emplace_back(lam, Partition{});
    return out;
}

}  // namespace

TEST_CASE("permutation validation") {
    CHECK(Permutation({2, 3, 1}).size() == 3);
    CHECK(Permutation({2, 3, 1}).reversed() == Permutation({1, 3, 2}));
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
}

TEST_CASE("row insertion") {
    auto [pi, qi] = rsk(Permutation({1, 2, 3, 4}));
    CHECK(pi == StandardTableau(SkewShape::parse("4"), {1, 2, 3, 4}));
    CHECK(qi == pi);

    auto [p, q] = rsk(Permutation({2, 3, 1}));
    CHECK(p == StandardTableau(SkewShape::parse("2,1"), {1, 3, 2}));
    CHECK(q == StandardTableau(SkewShape::parse("2,1"), {1, 2, 3}));

    auto [pc, qc] = rsk(Permutation({2, 1}));
    CHECK(pc == StandardTableau(SkewShape::parse("1,1"), {1, 2}));
    CHECK(qc == pc);
}

TEST_CASE("reverse insertion") {
    StandardTableau row(SkewShape::parse("3"), {1, 2, 3});
    CHECK(rsk_inverse(row, row) == Permutation({1, 2, 3}));

    CHECK(rsk_inverse(StandardTableau(SkewShape::parse("2,1"), {1, 3, 2}),
                      StandardTableau(SkewShape::parse("2,1"), {1, 2, 3})) ==
          Permutation({2, 3, 1}));

    CHECK_THROWS_AS(rsk_inverse(StandardTableau(SkewShape::parse("2,1"), {1, 3, 2}),
                                StandardTableau(SkewShape::parse("3"), {1, 2, 3})),
                    ShapeMismatch);
}

TEST_CASE("insertion round trip") {
    for (int n = 1; n <= 6; ++n)
        for (const Permutation& sigma : all_permutations(n)) {
            auto [p, q] = rsk(sigma);
            CHECK(p.shape == q.shape);
            CHECK(p.shape.is_straight());
            CHECK(rsk_inverse(p, q) == sigma);
        }
}

TEST_CASE("transposition") {
    StandardTableau t(SkewShape::parse("2,1"), {1, 3, 2});
    CHECK(transpose(t) == StandardTableau(SkewShape::parse("2,1"), {1, 2, 3}));
    CHECK(transpose(StandardTableau(SkewShape::parse("3"), {1, 2, 3})) ==
          StandardTableau(SkewShape::parse("1,1,1"), {1, 2, 3}));

    for (const SkewShape& s : straight_shapes(5))
        for (const StandardTableau& q : enumerate_syt(s)) {
            StandardTableau tq = transpose(q);
            CHECK(tq.shape == s.conjugate());
            CHECK(transpose(tq) == q);
        }
}

TEST_CASE("shape preserving involution") {
    CHECK(schuetzenberger(StandardTableau(SkewShape::parse("2,1"), {1, 2, 3})) ==
          StandardTableau(SkewShape::parse("2,1"), {1, 3, 2}));

    StandardTableau row(SkewShape::parse("4"), {1, 2, 3, 4});
    CHECK(schuetzenberger(row) == row);

    for (const SkewShape& s : straight_shapes(5))
        for (const StandardTableau& q : enumerate_syt(s)) {
            StandardTableau image = schuetzenberger(q);
            CHECK(image.shape == s);
            CHECK(schuetzenberger(image) == q);
        }

    CHECK_THROWS_AS(schuetzenberger(StandardTableau(SkewShape::parse("2,1/1"), {1, 2})),
                    SkewNotSupported);
}

TEST_CASE("involution does not depend on the auxiliary tableau") {
    for (const SkewShape& s : straight_shapes(4)) {
        std::vector<StandardTableau> tabs = enumerate_syt(s);
        for (const StandardTableau& q : tabs) {
            StandardTableau ref = schuetzenberger(q);
            for (const StandardTableau& aux : tabs) CHECK(schuetzenberger(q, aux) == ref);
        }
    }
}

TEST_CASE("involution carries maj to the plinth volume") {
    CHECK(verify_mahonian_schuetzenberger(SkewShape::parse("2,1")));
    CHECK(verify_mahonian_schuetzenberger(SkewShape::parse("4")));
    CHECK(verify_mahonian_schuetzenberger(SkewShape::parse("3,2")));

    for (const SkewShape& s : straight_shapes(5)) {
        CHECK(verify_mahonian_schuetzenberger(s));
        for (const StandardTableau& q : enumerate_syt(s))
            CHECK(descent_data(q).maj == plinth(schuetzenberger(q)).volume());
    }
}
