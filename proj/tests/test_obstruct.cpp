#include <doctest.h>

#include "corpus.hpp"
#include "swlink/obstruct.hpp"

using namespace swlink;

namespace {

LaurentPoly C(long c) { return LaurentPoly::constant(c); }

LaurentPoly tt(int a, int b) {
    return LaurentPoly::variable("t", a) * LaurentPoly::variable("tau", b);
}

} // namespace

TEST_CASE("identical and conjugate braids are never distinguished") {
    BraidWord b = parse_braid("3: 1 2 1 -2");
    REQUIRE(closure_components(b).count == 1);
    CHECK(braided_torus_obstruction(b, b).status == ObstructionStatus::NOT_DISTINGUISHED);

    testing::Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        BraidWord k = testing::random_knot_braid(rng, 4, 9);
        int g = testing::rand_int(rng, 1, k.strands - 1);
        if (testing::rand_int(rng, 0, 1)) g = -g;
        BraidWord moved = testing::element_preserving_rewrite(rng, conjugate(k, g));
        CHECK(braided_torus_obstruction(k, moved).status ==
              ObstructionStatus::NOT_DISTINGUISHED);
    }
}

TEST_CASE("a same-strand-count pair with distinct axis polynomials") {
    BraidWord b1 = parse_braid("3: 1 2");
    BraidWord b2 = parse_braid("3: 1 1 1 2");
    ObstructionVerdict v = braided_torus_obstruction(b1, b2);
    CHECK(v.status == ObstructionStatus::NOT_ISOTOPIC);
    REQUIRE(v.rhs_reversed.has_value());
    CHECK(AssociateClass(v.lhs) != AssociateClass(v.rhs));
    CHECK(AssociateClass(v.lhs) != AssociateClass(*v.rhs_reversed));

    // verdict is symmetric under argument swap
    CHECK(braided_torus_obstruction(b2, b1).status == ObstructionStatus::NOT_ISOTOPIC);
}

TEST_CASE("verdict is symmetric on random pairs") {
    testing::Rng rng(103);
    auto knot3 = [&rng] {
        for (;;) {
            BraidWord b;
            b.strands = 3;
            int len = testing::rand_int(rng, 0, 7);
            for (int i = 0; i < len; ++i) {
                int g = testing::rand_int(rng, 1, 2);
                b.letters.push_back(testing::rand_int(rng, 0, 1) ? g : -g);
            }
            if (closure_components(b).count == 1) return b;
        }
    };
    for (int trial = 0; trial < 15; ++trial) {
        BraidWord a = knot3();
        BraidWord c = knot3();
        CHECK(braided_torus_obstruction(a, c).status == braided_torus_obstruction(c, a).status);
    }
}

TEST_CASE("braided_torus_obstruction preconditions") {
    CHECK_THROWS_AS(braided_torus_obstruction(parse_braid("2: 1"), parse_braid("3: 1 2")),
                    StrandMismatch);
    CHECK_THROWS_AS(braided_torus_obstruction(parse_braid("2:"), parse_braid("2: 1")),
                    DomainError);
}

TEST_CASE("tau-orientation completeness") {
    // agree only after tau -> tau^-1: still not distinguished
    LaurentPoly p = tt(2, 2) + C(1) + tt(-2, -2);
    LaurentPoly q = tt(2, -2) + C(1) + tt(-2, 2);
    ObstructionVerdict v = compare_axis_invariants(p, q);
    CHECK(AssociateClass(p) != AssociateClass(q));
    CHECK(v.status == ObstructionStatus::NOT_DISTINGUISHED);

    // and the relation is symmetric
    CHECK(compare_axis_invariants(q, p).status == ObstructionStatus::NOT_DISTINGUISHED);

    LaurentPoly r = tt(4, 2) + C(1) + tt(-4, -2);
    CHECK(compare_axis_invariants(p, r).status == ObstructionStatus::NOT_ISOTOPIC);
}

TEST_CASE("simple_cover_obstruction") {
    AssociateClass chain(LaurentPoly::variable("t2") - C(1));
    CHECK(simple_cover_obstruction(chain, chain, 3, 3).status ==
          ObstructionStatus::NOT_DISTINGUISHED);

    // distinct degrees (the collapsed inputs carry palindromic Hosokawa parts)
    LaurentPoly t = LaurentPoly::variable("t");
    AssociateClass low(t - C(1));
    AssociateClass high((t - C(1)) * (t * t + C(3) * t + C(1)));
    ObstructionVerdict v = simple_cover_obstruction(low, high, 3, 3);
    CHECK(v.status == ObstructionStatus::NOT_ISOTOPIC);

    // equal degree, distinct polynomials
    AssociateClass other((t - C(1)) * (t * t - t + C(1)));
    CHECK(simple_cover_obstruction(high, other, 3, 3).status ==
          ObstructionStatus::NOT_ISOTOPIC);

    CHECK_THROWS_AS(simple_cover_obstruction(low, high, 2, 3), ArityMismatch);
    CHECK_THROWS_AS(simple_cover_obstruction(low, high, 3, 4), ArityMismatch);
}

TEST_CASE("strands_from_genus") {
    CHECK(strands_from_genus(0) == 4);
    CHECK(strands_from_genus(1) == 6);
    CHECK(strands_from_genus(5) == 14);
    CHECK_THROWS_AS(strands_from_genus(-1), DomainError);
}
