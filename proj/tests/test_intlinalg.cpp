#include <doctest.h>

#include <random>

#include "graphjac/errors.hpp"
#include "graphjac/intlinalg.hpp"

using namespace graphjac;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
    IntMatrix m(r, c);
    std::uniform_int_distribution<> dist(lo, hi);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

Int diagonal_product(const std::vector<Int>& d) {
    Int p = 1;
    for (const Int& x : d) p *= x;
    return p;
}

} // namespace

TEST_CASE("smith normal form of a known reduced Laplacian") {
    const IntMatrix m{{2, -1, 0}, {-1, 3, -1}, {0, -1, 2}};
    const std::vector<Int> d = smith_normal_form(m);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 1);
    CHECK(d[1] == 1);
    CHECK(d[2] == 8);
}

TEST_CASE("smith normal form basics") {
    CHECK(smith_normal_form(IntMatrix(0, 0)).empty());
    CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}) == std::vector<Int>{0, 0});
    CHECK(smith_normal_form(IntMatrix{{4, 0}, {0, 6}}) == std::vector<Int>{2, 12});
    CHECK(smith_normal_form(IntMatrix{{2, 4, 4}}) == std::vector<Int>{2});
    CHECK(smith_normal_form(IntMatrix::identity(4)) == std::vector<Int>(4, Int(1)));
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 1 + trial % 5;
        const int c = 1 + (trial / 2) % 5;
        const IntMatrix m = random_matrix(rng, r, c, -9, 9);
        const std::vector<Int> d = smith_normal_form(m);
        REQUIRE(d.size() == static_cast<size_t>(std::min(r, c)));
        // divisibility chain, zeros last
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i] == 0) {
                CHECK(d[i + 1] == 0);
            } else if (d[i + 1] != 0) {
                CHECK(d[i + 1] % d[i] == 0);
            }
        }
        for (const Int& x : d) CHECK(x >= 0);
        if (r == c) {
            // |det| is preserved by unimodular operations
            Int det = determinant(m);
            CHECK(abs(det) == diagonal_product(d));
        }
    }
}

TEST_CASE("row transform solves membership in the column lattice") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 2 + trial % 4;
        const int c = 1 + trial % 4;
        const IntMatrix m = random_matrix(rng, r, c, -5, 5);
        // b = m x for a random integer x must be in the image
        std::vector<Int> x(c), b(r, 0);
        std::uniform_int_distribution<> dist(-4, 4);
        for (int j = 0; j < c; ++j) x[j] = dist(rng);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b[i] += m.at(i, j) * x[j];
        CHECK(in_image(m, b));
    }
    // 2Z is not all of Z
    CHECK_FALSE(in_image(IntMatrix{{2}}, {Int(1)}));
    CHECK(in_image(IntMatrix{{2}}, {Int(-6)}));
    // zero map hits only zero
    CHECK_FALSE(in_image(IntMatrix{{0}, {0}}, {Int(0), Int(1)}));
}

TEST_CASE("determinant by Bareiss elimination") {
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK(determinant(IntMatrix{{5}}) == 5);
    CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    // Vandermonde on 2, 3, 5, 7
    const IntMatrix v{{1, 2, 4, 8}, {1, 3, 9, 27}, {1, 5, 25, 125}, {1, 7, 49, 343}};
    CHECK(determinant(v) == Int(1 * 3 * 5 * 2 * 4 * 2)); // prod of differences
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 5;
        const IntMatrix m = random_matrix(rng, n, n, -6, 6);
        // det is multiplicative
        const IntMatrix k = random_matrix(rng, n, n, -6, 6);
        CHECK(determinant(m * k) == determinant(m) * determinant(k));
    }
}

TEST_CASE("cokernel groups") {
    CHECK(cokernel_group(IntMatrix{{2, -1, 0}, {-1, 3, -1}, {0, -1, 2}}).to_string() == "Z/8");
    CHECK(cokernel_group(IntMatrix::identity(3)).is_trivial());
    const AbelianGroup g = cokernel_group(IntMatrix{{2, 0}, {0, 0}});
    CHECK(g.torsion == std::vector<Int>{2});
    CHECK(g.free_rank == 1);
    CHECK(g.to_string() == "Z/2 x Z");
}

TEST_CASE("group rendering") {
    CHECK(AbelianGroup{}.to_string() == "trivial");
    CHECK(AbelianGroup{{Int(2), Int(32)}, 0}.to_string() == "Z/2 x Z/32");
    CHECK(AbelianGroup{{}, 1}.to_string() == "Z");
    CHECK(AbelianGroup{{}, 2}.to_string() == "Z^2");
    CHECK(AbelianGroup{{Int(3)}, 1}.to_string() == "Z/3 x Z");
    CHECK(AbelianGroup{{Int(2), Int(32)}, 0}.torsion_order() == 64);
}

TEST_CASE("leading principal minors") {
    const IntMatrix m{{2, -1, 0}, {-1, 3, -1}, {0, -1, 2}};
    CHECK(leading_principal_minors(m) == std::vector<Int>{2, 5, 8});
}

TEST_CASE("characteristic polynomial") {
    CHECK(char_poly(IntMatrix::identity(2)) == std::vector<Int>{1, -2, 1});
    // companion matrix of x^2 - x - 1
    CHECK(char_poly(IntMatrix{{0, 1}, {1, 1}}) == std::vector<Int>{1, -1, -1});
    // constant term is (-1)^n det
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 4;
        const IntMatrix m = random_matrix(rng, n, n, -4, 4);
        const std::vector<Int> p = char_poly(m);
        REQUIRE(p.size() == static_cast<size_t>(n + 1));
        CHECK(p[0] == 1);
        CHECK(p[n] == (n % 2 ? -determinant(m) : determinant(m)));
        // trace
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        CHECK(p[1] == -tr);
    }
    CHECK_THROWS_AS(char_poly(IntMatrix(13, 13)), guard_error);
}

TEST_CASE("matrix product and transpose") {
    const IntMatrix a{{1, 2}, {3, 4}};
    const IntMatrix b{{0, 1}, {1, 0}};
    CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
    CHECK(a.transposed() == IntMatrix{{1, 3}, {2, 4}});
    CHECK(a.minor_matrix(0, 1) == IntMatrix{{3}});
}
