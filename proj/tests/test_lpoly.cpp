#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "cayley/lpoly.hpp"

using cayley::i128;
using cayley::LPoly;

namespace {

// Independent oracle for the Gaussian binomial [n choose k]_L: its L^m
// coefficient is the number of partitions of m fitting in a k x (n-k) box
// (at most k parts, each at most n-k). Recursion: either no part equals
// cols (the box narrows) or one does (remove that part).
int64_t box_partitions_of(int rows, int cols, int m) {
    if (m == 0) return 1;
    if (m < 0 || rows == 0 || cols == 0) return 0;
    return box_partitions_of(rows, cols - 1, m) + box_partitions_of(rows - 1, cols, m - cols);
}

std::vector<int64_t> partitions_in_box(int rows, int cols) {
    std::vector<int64_t> counts(rows * cols + 1, 0);
    for (int m = 0; m <= rows * cols; ++m) counts[m] = box_partitions_of(rows, cols, m);
    return counts;
}

}  // namespace

TEST_CASE("canonical form drops trailing zeros") {
    CHECK(LPoly{}.is_zero());
    CHECK(LPoly{}.degree() == -1);
    CHECK(LPoly({0, 0, 0}).is_zero());
    CHECK(LPoly({1, 2, 0, 0}).degree() == 1);
    CHECK(LPoly::constant(0).is_zero());
    CHECK(LPoly::monomial(3).degree() == 3);
    CHECK(LPoly::monomial(3, 0).is_zero());
}

TEST_CASE("ring arithmetic") {
    LPoly l = LPoly::monomial(1);
    LPoly one = LPoly::constant(1);

    CHECK((l - one) * (l + one) == LPoly({-1, 0, 1}));  // L^2 - 1
    CHECK(l * LPoly{} == LPoly{});
    CHECK(l + (-l) == LPoly{});
    CHECK(LPoly({1, 1}) * LPoly({1, 1}) == LPoly({1, 2, 1}));

    // (L^2-1)(L^2-L) expanded: L^4 - L^3 - L^2 + L
    LPoly frame = (LPoly::monomial(2) - one) * (LPoly::monomial(2) - l);
    CHECK(frame == LPoly({0, 1, -1, -1, 1}));
}

TEST_CASE("projective space classes") {
    CHECK(cayley::class_projective(0) == LPoly::constant(1));
    CHECK(cayley::class_projective(6) == LPoly({1, 1, 1, 1, 1, 1, 1}));
    CHECK(cayley::class_projective(6).eval_at(2) == 127);
    CHECK(cayley::class_projective(6).eval_at(3) == 1093);
    CHECK(cayley::class_projective(6).eval_at(5) == 19531);  // (5^7-1)/4
    CHECK(cayley::class_projective(5).eval_at(2) == 63);
    CHECK(cayley::class_projective(5).eval_at(3) == 364);
    CHECK(cayley::class_projective(5).eval_at(7) == 19608);
}

TEST_CASE("Gaussian binomial matches the partition-counting oracle") {
    // [7 choose 2]_L: partitions in a 2x5 box
    LPoly g27 = cayley::class_grassmannian(2, 7);
    std::vector<int64_t> expect = partitions_in_box(2, 5);
    REQUIRE(g27.degree() == 10);
    for (int m = 0; m <= 10; ++m) CHECK(g27.coeff(m) == expect[m]);

    // a couple of other shapes against the same oracle
    for (auto [k, n] : {std::pair{3, 7}, {2, 5}, {1, 4}}) {
        LPoly g = cayley::class_grassmannian(k, n);
        std::vector<int64_t> box = partitions_in_box(k, n - k);
        REQUIRE(g.degree() == k * (n - k));
        for (int m = 0; m <= g.degree(); ++m) CHECK(g.coeff(m) == box[m]);
    }

    // degenerate shapes
    CHECK(cayley::class_grassmannian(0, 5) == LPoly::constant(1));
    CHECK(cayley::class_grassmannian(5, 5) == LPoly::constant(1));
    CHECK(cayley::class_grassmannian(1, 3) == cayley::class_projective(2));
}

TEST_CASE("plane Grassmannian point counts at small q") {
    LPoly g = cayley::class_grassmannian(2, 7);
    CHECK(g.eval_at(2) == 2667);
    CHECK(g.eval_at(3) == 99463);
    CHECK(g.eval_at(5) == 12714681);
    CHECK(g.eval_at(7) == 336416907);
}

TEST_CASE("exact division succeeds exactly on multiples") {
    LPoly l = LPoly::monomial(1);
    LPoly one = LPoly::constant(1);

    CHECK(LPoly::exact_div(l * l - one, l - one) == l + one);
    CHECK(LPoly::exact_div(LPoly{}, l - one) == LPoly{});

    CHECK_THROWS_AS(LPoly::exact_div(l * l + one, l - one), std::domain_error);
    CHECK_THROWS_AS(LPoly::exact_div(LPoly({1, 2}), LPoly({0, 0, 1})), std::domain_error);
    CHECK_THROWS_AS(LPoly::exact_div(LPoly({0, 0, 2}), LPoly({0, 3})), std::domain_error);
    CHECK_THROWS_AS(LPoly::exact_div(one, LPoly{}), std::domain_error);
}

TEST_CASE("evaluation is exact in 128 bits and overflow is an error") {
    CHECK(LPoly({1, 1, 1}).eval_at(10) == 111);
    CHECK(LPoly({-1, 0, 1}).eval_at(-3) == 8);

    // 61^24 does not fit a signed 128-bit integer
    CHECK_THROWS_AS(LPoly::monomial(24).eval_at(61), std::overflow_error);
}

TEST_CASE("coefficient overflow never wraps") {
    LPoly big = LPoly::constant(int64_t{1} << 62);
    CHECK_THROWS_AS(big * LPoly::constant(4), std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}

TEST_CASE("rendering") {
    CHECK(LPoly{}.str() == "0");
    CHECK(LPoly::constant(-7).str() == "-7");
    CHECK((LPoly::monomial(2) - LPoly::constant(1)).str() == "1*L^2 - 1");
    CHECK(LPoly({0, 2, 0, -3}).str() == "-3*L^3 + 2*L^1");
}
