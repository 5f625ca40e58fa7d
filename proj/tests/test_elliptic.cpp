#include <doctest.h>

#include <random>

#include "conicbr/elliptic.hpp"
#include "conicbr/errors.hpp"
#include "conicbr/poly.hpp"

using namespace conicbr;

namespace {

Rat rq(long n, long d = 1) { return make_rat(n, d); }
const Curve kE2 = Curve::from_ab(rq(0), rq(-2));   // y^2 = x^3 - 2
const Curve kEx = Curve::from_ab(rq(-1), rq(0));   // y^2 = x^3 - x
const CurvePoint kG = CurvePoint::affine(rq(3), rq(5));

}  // namespace

TEST_SUITE("elliptic") {

TEST_CASE("curve construction and validation") {
    CHECK_THROWS_AS(Curve::from_ab(rq(0), rq(0)), InvalidInput);
    CHECK_THROWS_AS(Curve::from_roots(rq(1), rq(1), rq(2)), InvalidInput);
    Curve E = Curve::from_roots(rq(-4), rq(-1), rq(0));
    CHECK(E.A == rq(-13, 3));
    CHECK(E.B == rq(70, 27));
    CHECK(E.x_shift == rq(-5, 3));
    // user roots land on y = 0 after the shift
    for (long r : {-4L, -1L, 0L})
        CHECK(on_curve(E, CurvePoint::affine(E.from_user_x(rq(r)), rq(0))));
}

TEST_CASE("group law identities and the doubling example") {
    CHECK(add(kE2, kG, CurvePoint::infinity()) == kG);
    CHECK(add(kE2, kG, neg(kG)).is_infinity());
    CurvePoint twoG = double_point(kE2, kG);
    CHECK(twoG == CurvePoint::affine(rq(129, 100), rq(-383, 1000)));
    CHECK_THROWS_AS(add(kE2, CurvePoint::affine(rq(1), rq(1)), kG), PointNotOnCurve);
}

TEST_CASE("group law is commutative and associative on small multiples") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int i = 0; i < 50; ++i) {
        CurvePoint P = multiple(kE2, d(rng), kG);
        CurvePoint Q = multiple(kE2, d(rng), kG);
        CurvePoint R = multiple(kE2, d(rng), kG);
        CHECK(add(kE2, P, Q) == add(kE2, Q, P));
        CHECK(add(kE2, add(kE2, P, Q), R) == add(kE2, P, add(kE2, Q, R)));
        CHECK(add(kE2, P, neg(P)).is_infinity());
    }
}

TEST_CASE("two torsion") {
    auto t1 = two_torsion(kEx);
    REQUIRE(t1.size() == 4);
    CHECK(t1[0] == CurvePoint::affine(rq(-1), rq(0)));
    CHECK(t1[1] == CurvePoint::affine(rq(0), rq(0)));
    CHECK(t1[2] == CurvePoint::affine(rq(1), rq(0)));
    CHECK(t1[3].is_infinity());

    auto t2 = two_torsion(kE2);
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].is_infinity());

    auto t3 = two_torsion(Curve::from_ab(rq(-4), rq(0)));
    CHECK(t3.size() == 4);
}

TEST_CASE("halving examples") {
    CHECK(halve(kEx, CurvePoint::infinity()) == two_torsion(kEx));

    CurvePoint twoG = double_point(kE2, kG);
    auto h = halve(kE2, twoG);
    REQUIRE(h.size() == 1);
    CHECK(h[0] == kG);

    CHECK(halve(kE2, kG).empty());
}

TEST_CASE("halving with full 2-torsion returns all four halves") {
    Curve E = Curve::from_roots(rq(-4), rq(-1), rq(0));  // y^2 = x(x+1)(x+4)
    CurvePoint P = CurvePoint::affine(E.from_user_x(rq(0)), rq(0));
    auto h = halve(E, P);
    REQUIRE(h.size() == 4);
    for (const CurvePoint& Q : h) CHECK(double_point(E, Q) == P);
    // user coordinates: (-2, +-2), (2, +-6)
    CHECK(h[0] == CurvePoint::affine(E.from_user_x(rq(-2)), rq(-2)));
    CHECK(h[1] == CurvePoint::affine(E.from_user_x(rq(-2)), rq(2)));
    CHECK(h[2] == CurvePoint::affine(E.from_user_x(rq(2)), rq(-6)));
    CHECK(h[3] == CurvePoint::affine(E.from_user_x(rq(2)), rq(6)));
    // any two halves differ by 2-torsion
    auto tors = two_torsion(E);
    for (const CurvePoint& Q1 : h)
        for (const CurvePoint& Q2 : h) {
            CurvePoint diff = add(E, Q1, neg(Q2));
            CHECK(std::find(tors.begin(), tors.end(), diff) != tors.end());
        }
}

TEST_CASE("halving round trip on multiples of G") {
    for (long m = 1; m <= 20; ++m) {
        CurvePoint R = multiple(kE2, m, kG);
        CurvePoint P = double_point(kE2, R);
        auto h = halve(kE2, P);
        REQUIRE(!h.empty());
        bool contains = false;
        for (const CurvePoint& Q : h) {
            CHECK(double_point(kE2, Q) == P);
            contains = contains || Q == R;
        }
        CHECK(contains);
    }
}

TEST_CASE("tangent line examples") {
    LinearForm l = tangent_line(kE2, kG);
    CHECK(l == LinearForm(rq(27), rq(-10), rq(-31)));

    LinearForm v = tangent_line(kEx, CurvePoint::affine(rq(0), rq(0)));
    CHECK(v == LinearForm(rq(1), rq(0), rq(0)));

    // third intersection of the tangent at G is -2G
    CurvePoint third = neg(double_point(kE2, kG));
    CHECK(l.eval_affine(third.x, third.y) == 0);

    CHECK_THROWS_AS(tangent_line(kE2, CurvePoint::infinity()), PointAtInfinity);
}

TEST_CASE("intersection multiplicities") {
    LinearForm l = tangent_line(kE2, kG);
    CurvePoint third = neg(double_point(kE2, kG));
    CHECK(intersection_multiplicity(kE2, l, kG) == 2);
    CHECK(intersection_multiplicity(kE2, l, third) == 1);
    CHECK(intersection_multiplicity(kE2, l, CurvePoint::infinity()) == 3);

    LinearForm z(rq(0), rq(0), rq(1));
    CHECK(intersection_multiplicity(kE2, z, kG) == 0);
    CHECK(intersection_multiplicity(kE2, z, CurvePoint::infinity()) == 0);

    // vertical line at a 2-torsion point
    LinearForm vx(rq(1), rq(0), rq(0));
    CHECK(intersection_multiplicity(kEx, vx, CurvePoint::affine(rq(0), rq(0))) == 2);
    CHECK(intersection_multiplicity(kEx, vx, CurvePoint::infinity()) == 2);

    CHECK_THROWS_AS(intersection_multiplicity(kE2, LinearForm(), kG), DegenerateForm);
}

TEST_CASE("tangent lines satisfy the degree-zero divisor identity") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> d(1, 10);
    for (int i = 0; i < 20; ++i) {
        CurvePoint Q = multiple(kE2, d(rng), kG);
        LinearForm l = tangent_line(kE2, Q);
        CHECK(intersection_multiplicity(kE2, l, Q) >= 2);
        // affine zeros: Q with multiplicity 2 and -2Q with multiplicity 1
        // (they coincide when 3Q = O, which never happens on this curve)
        CurvePoint T = neg(double_point(kE2, Q));
        long total = line_valuation(kE2, l, Q) + line_valuation(kE2, l, T) +
                     line_valuation(kE2, l, CurvePoint::infinity());
        CHECK(total == 0);
    }
    // vertical through a non-torsion point: zeros at +-P, double pole at O
    CurvePoint P = multiple(kE2, 2, kG);
    LinearForm vert(rq(1), rq(0), -P.x);
    long total = line_valuation(kE2, vert, P) + line_valuation(kE2, vert, neg(P)) +
                 line_valuation(kE2, vert, CurvePoint::infinity());
    CHECK(total == 0);
}

TEST_CASE("irrational intersection clusters complete the degree count") {
    // the horizontal line y = 5 meets y^2 = x^3 - 2 at (3,5) and at the two
    // conjugate roots of x^2 + 3x + 9
    LinearForm l(rq(0), rq(1), rq(-5));
    CHECK(intersection_multiplicity(kE2, l, kG) == 1);
    CHECK(intersection_multiplicity(kE2, l, CurvePoint::infinity()) == 3);
    PolyQ cubic{rq(-27), rq(0), rq(0), rq(1)};  // substitution of y = 5
    int rational_part = 0;
    for (const auto& rm : rational_roots(cubic)) rational_part += rm.multiplicity;
    int cluster_degree = poly_degree(cubic) - rational_part;
    CHECK(cluster_degree == 2);
    CHECK(rational_part + cluster_degree - 3 == 0);  // total divisor degree
}

TEST_CASE("real components") {
    CHECK(real_components(kE2) == RealComponents::Connected);       // 27*4 > 0
    CHECK(real_components(kEx) == RealComponents::TwoComponents);   // -4 < 0
    CHECK(real_components(Curve::from_ab(rq(1), rq(0))) == RealComponents::Connected);
}

}  // TEST_SUITE
