#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "pedlab/corpus.hpp"
#include "pedlab/errors.hpp"
#include "pedlab/intpoly.hpp"
#include "pedlab/pedestal.hpp"
#include "pedlab/poset.hpp"
#include "pedlab/shapes.hpp"
#include "pedlab/specmat.hpp"

using namespace pedlab;

namespace {

const Poset kAnti2 = Poset::from_covers({"a", "b"}, {});

std::vector<std::vector<mpz_class>> sorted_coeffs(const EigenResult& r) {
    std::vector<std::vector<mpz_class>> out;
    for (const IntPoly& e : r.eigenvalues) out.push_back(e.coeffs());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("matrix construction") {
    PedestalMatrix m = pedestal_matrix(kAnti2);
    CHECK(m.dim == 2);
    CHECK(m.entries[0][0] == IntPoly{1});
    CHECK(m.entries[0][1] == IntPoly{0, 1});
    CHECK(m.entries[1][0] == IntPoly{0, 1});
    CHECK(m.entries[1][1] == IntPoly{1});

    PedestalMatrix one = pedestal_matrix(Poset::from_covers({"a"}, {}));
    CHECK(one.dim == 1);
    CHECK(one.entries[0][0] == IntPoly{1});
}

TEST_CASE("matrix of the five extension poset") {
    Poset p = Poset::from_skew_shape(SkewShape::parse("3,2"));
    PedestalMatrix m = pedestal_matrix(p);
    CHECK(m.dim == 5);
    CHECK(m.extension_index == linear_extensions(p));

    IntPoly row_sum_ref{1, 1, 1, 1, 1};
    for (int r = 0; r < 5; ++r) {
        CHECK(m.entries[static_cast<size_t>(r)][static_cast<size_t>(r)] == IntPoly{1});
        std::vector<int> exponents;
        IntPoly row_sum;
        for (int c = 0; c < 5; ++c) {
            exponents.push_back(m.entries[static_cast<size_t>(r)][static_cast<size_t>(c)].degree());
            row_sum += m.entries[static_cast<size_t>(r)][static_cast<size_t>(c)];
        }
        std::sort(exponents.begin(), exponents.end());
        CHECK(exponents == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(row_sum == row_sum_ref);
    }
}

TEST_CASE("matrix specializations at zero and one") {
    for (const NamedPoset& np : named_posets()) {
        if (np.poset.size() == 0 || np.poset.size() > 4) continue;
        PedestalMatrix m = pedestal_matrix(np.poset);
        for (int r = 0; r < m.dim; ++r)
            for (int c = 0; c < m.dim; ++c) {
                const IntPoly& e = m.entries[static_cast<size_t>(r)][static_cast<size_t>(c)];
                CHECK(e.eval(0) == (r == c ? 1 : 0));
                CHECK(e.eval(1) == 1);
            }
    }
}

TEST_CASE("row sums equal the pedestal polynomial") {
    for (const NamedPoset& np : named_posets()) {
        if (np.poset.size() == 0 || np.poset.size() > 4) continue;
        PedestalMatrix m = pedestal_matrix(np.poset);
        for (int r = 0; r < m.dim; ++r) {
            IntPoly row_sum;
            for (int c = 0; c < m.dim; ++c)
                row_sum += m.entries[static_cast<size_t>(r)][static_cast<size_t>(c)];
            CHECK(row_sum == pedestal_polynomial(np.poset, m.extension_index[static_cast<size_t>(r)]));
        }
    }
}

TEST_CASE("characteristic polynomial") {
    CharPoly one = char_poly(pedestal_matrix(Poset::from_covers({"a"}, {})));
    CHECK(one.dim() == 1);
    CHECK(one.coeffs_in_lambda == std::vector<IntPoly>{IntPoly{-1}, IntPoly{1}});

    CharPoly two = char_poly(pedestal_matrix(kAnti2));
    CHECK(two.dim() == 2);
    CHECK(two.coeffs_in_lambda == std::vector<IntPoly>{IntPoly{1, 0, -1}, IntPoly{-2}, IntPoly{1}});

    CharPoly five = char_poly(pedestal_matrix(Poset::from_skew_shape(SkewShape::parse("3,2"))));
    CHECK(five.dim() == 5);
    CHECK(five.coeffs_in_lambda[5] == IntPoly{1});
    CHECK(five.coeffs_in_lambda[4] == IntPoly{-5});
}

TEST_CASE("integer determinants") {
    CHECK(int_determinant({{1, 2}, {3, 4}}) == -2);
    CHECK(int_determinant({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
    CHECK(int_determinant({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
    CHECK(int_determinant({{1, 1}, {1, 1}}) == 0);
    CHECK(int_determinant({{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("eigenvalues of small matrices") {
    EigenResult one = eigen_polynomials(pedestal_matrix(Poset::from_covers({"a"}, {})));
    CHECK(one.certified);
    CHECK(one.eigenvalues == std::vector<IntPoly>{IntPoly{1}});

    EigenResult two = eigen_polynomials(pedestal_matrix(kAnti2));
    CHECK(two.certified);
    CHECK(sorted_coeffs(two) == std::vector<std::vector<mpz_class>>{{1, -1}, {1, 1}});

    EigenResult wedge = eigen_polynomials(pedestal_matrix(Poset::from_skew_shape(SkewShape::parse("2,2/1"))));
    CHECK(wedge.certified);
    CHECK(sorted_coeffs(wedge) == std::vector<std::vector<mpz_class>>{{1, 0, -1}, {1, 0, 1}});
}

TEST_CASE("eigenvalues of the five extension matrix") {
    PedestalMatrix m = pedestal_matrix(Poset::from_skew_shape(SkewShape::parse("3,2")));
    EigenResult r = eigen_polynomials(m);
    CHECK(r.certified);
    CHECK(sorted_coeffs(r) == std::vector<std::vector<mpz_class>>{{1, -1, 0, -1, 1},
                                                                  {1, -1, 0, 1, -1},
                                                                  {1, 0, -1},
                                                                  {1, 1, 0, -1, -1},
                                                                  {1, 1, 1, 1, 1}});

    IntPoly product{1};
    for (const IntPoly& e : r.eigenvalues) product *= e;
    CharPoly cp = char_poly(m);
    CHECK(product == (m.dim % 2 == 0 ? cp.coeffs_in_lambda[0] : -cp.coeffs_in_lambda[0]));
}

TEST_CASE("structural eigenvalue identities") {
    for (const NamedPoset& np : named_posets()) {
        if (np.poset.size() == 0) continue;
        std::vector<LinearExtension> exts = linear_extensions(np.poset);
        long m = static_cast<long>(exts.size());
        if (m > 12) continue;
        PedestalMatrix mat = pedestal_matrix(np.poset);
        EigenResult r = eigen_polynomials(mat);
        CHECK(r.certified);
        CHECK(static_cast<long>(r.eigenvalues.size()) == m);

        IntPoly sum;
        int top_count = 0;
        IntPoly row_sum;
        for (int c = 0; c < mat.dim; ++c) row_sum += mat.entries[0][static_cast<size_t>(c)];
        for (const IntPoly& e : r.eigenvalues) {
            CHECK(e.eval(0) == 1);
            sum += e;
            if (e.eval(1) == m) {
                ++top_count;
                CHECK(e == row_sum);
            } else {
                CHECK(e.eval(1) == 0);
            }
        }
        CHECK(sum == IntPoly::constant(m));
        CHECK(top_count == 1);
    }
}

TEST_CASE("eigenvalue verification entry point") {
    CHECK(verify_integer_eigenvalues(Poset::from_skew_shape(SkewShape::parse("3,2"))));
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::string> labels;
        std::vector<std::pair<std::string, std::string>> covers;
        for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
        CHECK(verify_integer_eigenvalues(Poset::from_covers(labels, {})));
        for (int i = 0; i + 1 < n; ++i) covers.emplace_back(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(i) + 1]);
        CHECK(verify_integer_eigenvalues(Poset::from_covers(labels, covers)));
    }
}

TEST_CASE("factored display") {
    CHECK(factored_display(IntPoly{1, 0, -1}) == "(1-q)*(1+q)");
    CHECK(factored_display(IntPoly{1, -1, 0, -1, 1}) == "(1-q)^2*(1+q+q^2)");
    CHECK(factored_display(IntPoly{1, 1, 1, 1, 1}) == "(1+q+q^2+q^3+q^4)");
    CHECK(factored_display(IntPoly{1}) == "1");
    CHECK(factored_display(IntPoly{0, 1}) == "");
}
