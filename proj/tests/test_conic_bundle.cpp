#include <doctest.h>

#include <random>

#include "conicbr/conic_bundle.hpp"
#include "conicbr/errors.hpp"

using namespace conicbr;

namespace {

Rat rq(long n, long d = 1) { return make_rat(n, d); }
const Curve kE2 = Curve::from_ab(rq(0), rq(-2));
const Curve kEx = Curve::from_ab(rq(-1), rq(0));
const CurvePoint kG = CurvePoint::affine(rq(3), rq(5));

}  // namespace

TEST_SUITE("conic_bundle") {

TEST_CASE("generic fibre class per flavor") {
    BundleSpec s2s = BundleSpec::sums_of_two_squares(kEx);
    QuaternionClass A = generic_fibre_class(s2s);
    CHECK(A.a == -1);
    REQUIRE(A.f.factors.size() == 1);
    CHECK(std::holds_alternative<YAtom>(A.f.factors[0].atom));

    CurvePoint p2 = double_point(kE2, kG);
    BundleSpec ch = BundleSpec::chatelet(kE2, rq(-1), {p2});
    QuaternionClass Ac = generic_fibre_class(ch);
    REQUIRE(Ac.f.factors.size() == 1);
    CHECK(std::get<XMinusC>(Ac.f.factors[0].atom).c == p2.x);

    FnElement lines;
    lines.mul(LineAtom{tangent_line(kE2, kG)}, 1);
    lines.mul(LineAtom{tangent_line(kE2, p2)}, -1);
    BundleSpec cu = BundleSpec::custom(kE2, rq(3), lines);
    CHECK(generic_fibre_class(cu).f.factors.size() == 2);
}

TEST_CASE("bundle validation") {
    CHECK_THROWS_AS(BundleSpec::chatelet(kE2, rq(4), {kG}), InvalidInput);       // square a
    CHECK_THROWS_AS(BundleSpec::chatelet(kE2, rq(-1), {}), InvalidInput);        // no points
    CHECK_THROWS_AS(BundleSpec::chatelet(kE2, rq(-1), {CurvePoint::infinity()}), InvalidInput);
    CHECK_THROWS_AS(BundleSpec::chatelet(kE2, rq(-1), {CurvePoint::affine(rq(1), rq(1))}),
                    PointNotOnCurve);
}

TEST_CASE("singular locus of the sums-of-two-squares bundle on full 2-torsion") {
    SingularLocus locus = singular_locus(BundleSpec::sums_of_two_squares(kEx));
    REQUIRE(locus.points.size() == 4);
    CHECK(locus.points[0] == CurvePoint::affine(rq(-1), rq(0)));
    CHECK(locus.points[1] == CurvePoint::affine(rq(0), rq(0)));
    CHECK(locus.points[2] == CurvePoint::affine(rq(1), rq(0)));
    CHECK(locus.points[3].is_infinity());
    CHECK(locus.stated_matches_engine);
    CHECK(!locus.warning.has_value());
}

TEST_CASE("sums-of-two-squares locus requires full rational 2-torsion") {
    CHECK_THROWS_AS(singular_locus(BundleSpec::sums_of_two_squares(kE2)), UnsupportedClosedPoint);
}

TEST_CASE("chatelet locus: n = 2 has the four points and no warning") {
    CurvePoint p2 = double_point(kE2, kG);
    CurvePoint p4 = multiple(kE2, 4, kG);
    SingularLocus locus = singular_locus(BundleSpec::chatelet(kE2, rq(-1), {p2, p4}));
    CHECK(locus.n == 2);
    CHECK(locus.t == 0);
    REQUIRE(locus.points.size() == 4);
    CHECK(locus.stated_matches_engine);
    // engine locus = {+-P1, +-P2}
    for (const CurvePoint& P : {p2, neg(p2), p4, neg(p4)})
        CHECK(std::find(locus.points.begin(), locus.points.end(), P) != locus.points.end());
}

TEST_CASE("chatelet locus: odd n disagrees with the closed form over O") {
    CurvePoint p2 = double_point(kE2, kG);
    SingularLocus locus = singular_locus(BundleSpec::chatelet(kE2, rq(-1), {p2}));
    CHECK(locus.n == 1);
    CHECK(locus.points.size() == 2);  // O excluded: v_O(x - x1) = -2 is even
    CHECK(locus.stated_points.size() == 3);  // the family's stated locus includes O
    CHECK(!locus.stated_matches_engine);
    CHECK(locus.warning.has_value());
    for (const CurvePoint& P : locus.points) CHECK(!P.is_infinity());
}

TEST_CASE("chatelet locus with a 2-torsion point among the P_i") {
    // y^2 = x(x+1)(x+4): (0,0) = 2*(2,6) is 2-torsion and lies in 2E(Q)
    Curve E = Curve::from_roots(rq(-4), rq(-1), rq(0));
    CurvePoint P3 = CurvePoint::affine(E.from_user_x(rq(0)), rq(0));
    CurvePoint Q = CurvePoint::affine(E.from_user_x(rq(2)), rq(6));
    CHECK(double_point(E, Q) == P3);  // Q has order 4

    SingularLocus locus = singular_locus(BundleSpec::chatelet(E, rq(-1), {P3}));
    CHECK(locus.n == 1);
    CHECK(locus.t == 1);
    // x - x(P3) vanishes doubly at the 2-torsion point and has an even pole
    // at O: no odd valuations anywhere, the engine locus is empty
    CHECK(locus.points.empty());
    CHECK(locus.stated_points.size() == 2);  // {P3, O} in the stated reading
    CHECK(!locus.stated_matches_engine);
    CHECK(locus.warning.has_value());
}

TEST_CASE("chatelet locus: a 2-torsion companion point drops out, unlike the closed form") {
    // y^2 = x^3 - 36x has full 2-torsion and the non-torsion 2G' = (25/4, -35/8)
    // for G' = (-3, 9); include the 2-torsion point (6, 0) among the P_i
    Curve E = Curve::from_ab(rq(-36), rq(0));
    CurvePoint Gp = CurvePoint::affine(rq(-3), rq(9));
    CurvePoint P1 = double_point(E, Gp);
    CHECK(P1 == CurvePoint::affine(rq(25, 4), rq(-35, 8)));
    CurvePoint P2 = CurvePoint::affine(rq(6), rq(0));

    SingularLocus locus = singular_locus(BundleSpec::chatelet(E, rq(-1), {P1, P2}));
    CHECK(locus.n == 2);
    CHECK(locus.t == 1);
    // x - 6 vanishes doubly at (6,0): only +-P1 remain
    REQUIRE(locus.points.size() == 2);
    CHECK(locus.points[0] == P1);
    CHECK(locus.points[1] == neg(P1));
    CHECK(locus.stated_points.size() == 3);
    CHECK(!locus.stated_matches_engine);

    // the two rank readings disagree here: closed form 2n-t-2 = 1, engine 0
    BrauerReport rep = compute_brauer_group(E, rq(-1), generic_fibre_class(
        BundleSpec::chatelet(E, rq(-1), {P1, P2})), locus.points);
    CHECK(rep.checks.all_pass());
    REQUIRE(rep.theorem_rank.has_value());
    CHECK(*rep.theorem_rank == 0);
    CHECK(corollary_rank(locus.n, locus.t) == 1);
}

TEST_CASE("custom locus from line atoms and irrational-support errors") {
    FnElement lines;
    lines.mul(LineAtom{tangent_line(kE2, kG)}, 1);
    BundleSpec cu = BundleSpec::custom(kE2, rq(3), lines);
    SingularLocus locus = singular_locus(cu);
    // div(l/Z) = 2[G] + [-2G] - 3[O]: odd valuations at -2G and O
    REQUIRE(locus.points.size() == 2);
    CHECK(locus.points[0] == neg(double_point(kE2, kG)));
    CHECK(locus.points[1].is_infinity());

    FnElement bad;
    bad.mul(XMinusC{rq(0)}, 1);  // x = 0 meets y^2 = x^3 - 2 at y^2 = -2
    CHECK_THROWS_AS(singular_locus(BundleSpec::custom(kE2, rq(-1), bad)), UnsupportedClosedPoint);
}

TEST_CASE("corollary rank closed form") {
    CHECK(corollary_rank(2, 0) == 2);
    CHECK(corollary_rank(3, 0) == 5);
    CHECK(corollary_rank(1, 1) == 0);
    CHECK(corollary_rank(1, 0) == 1);
    CHECK_THROWS_AS(corollary_rank(0, 0), InvalidInput);
    CHECK_THROWS_AS(corollary_rank(2, 3), InvalidInput);
}

TEST_CASE("fibre local solvability") {
    BundleSpec s2s = BundleSpec::sums_of_two_squares(kE2);
    CHECK(fibre_has_local_point(s2s, kG, Place::real()));  // y(G) = 5 > 0
    CurvePoint m2 = double_point(kE2, kG);                 // y < 0
    CHECK(!fibre_has_local_point(s2s, m2, Place::real()));

    // value 21 at a point: (-1, 21)_3 = -1
    FnElement f;
    f.mul(XMinusC{rq(-18)}, 1);  // x + 18 evaluates to 21 at G
    BundleSpec cu = BundleSpec::custom(kE2, rq(-1), f);
    CHECK(evaluate_exact(kE2, f, kG) == 21);
    CHECK(!fibre_has_local_point(cu, kG, Place::finite(Int(3))));
    CHECK(fibre_has_local_point(cu, kG, Place::real()));

    // singular fibre is an error, not a boolean
    BundleSpec chat = BundleSpec::chatelet(kE2, rq(-1), {m2});
    CHECK_THROWS_AS(fibre_has_local_point(chat, m2, Place::real()), PoleOrZeroAtPoint);
    CHECK_THROWS_AS(fibre_has_local_point(s2s, CurvePoint::infinity(), Place::real()),
                    PoleOrZeroAtPoint);
}

TEST_CASE("fibre global solvability matches the two-squares criterion") {
    BundleSpec s2s = BundleSpec::sums_of_two_squares(kE2);
    CHECK(fibre_has_rational_point(s2s, kG));                      // 5 = 1 + 4
    CHECK(!fibre_has_rational_point(s2s, double_point(kE2, kG)));  // negative y

    FnElement f;
    f.mul(XMinusC{rq(-18)}, 1);
    BundleSpec cu = BundleSpec::custom(kE2, rq(-1), f);
    CHECK(!fibre_has_rational_point(cu, kG));  // 21 is not a sum of two squares

    std::mt19937 rng(43);
    std::uniform_int_distribution<long> d(1, 8);
    int agreements = 0;
    for (int i = 0; i < 50; ++i) {
        CurvePoint P = multiple(kE2, d(rng), kG);
        bool global = fibre_has_rational_point(s2s, P);
        CHECK(global == is_sum_of_two_squares(P.y));
        ++agreements;
    }
    CHECK(agreements == 50);
}

TEST_CASE("hasse consistency: any failing place forces a global no") {
    BundleSpec s2s = BundleSpec::sums_of_two_squares(kE2);
    std::mt19937 rng(47);
    // coordinates of multiples beyond 5G contain primes past the default bound
    std::uniform_int_distribution<long> d(1, 5);
    for (int i = 0; i < 25; ++i) {
        CurvePoint P = multiple(kE2, d(rng), kG);
        Rat value = evaluate_exact(kE2, s2s.coefficient, P);
        bool all_local = hilbert_symbol(s2s.a, value, Place::real()) == 1 &&
                         hilbert_symbol(s2s.a, value, Place::finite(Int(2))) == 1;
        for (const Int& p : odd_primes_dividing({s2s.a, value}))
            all_local = all_local && hilbert_symbol(s2s.a, value, Place::finite(p)) == 1;
        CHECK(all_local == fibre_has_rational_point(s2s, P));
    }
}

TEST_CASE("survey over multiples of G") {
    BundleSpec s2s = BundleSpec::sums_of_two_squares(kE2);
    SurveyResult res = survey_multiples(s2s, kG, 4);
    REQUIRE(res.entries.size() == 4);
    CHECK(res.entries[0].status == SurveyEntry::Status::HasPoint);   // y = 5
    CHECK(res.entries[1].status == SurveyEntry::Status::NoPoint);    // y = -383/1000
    CHECK(res.entries[2].status == SurveyEntry::Status::NoPoint);
    CHECK(res.entries[3].status == SurveyEntry::Status::NoPoint);
    CHECK(res.completed == 4);
    CHECK(!res.abort_reason.has_value());

    // multiples hitting the singular locus are flagged, not decided
    BundleSpec s2sx = BundleSpec::sums_of_two_squares(kEx);
    SurveyResult over_torsion = survey_multiples(s2sx, CurvePoint::affine(rq(0), rq(0)), 2);
    CHECK(over_torsion.entries[0].status == SurveyEntry::Status::SingularFibre);  // y(G) = 0
    CHECK(over_torsion.entries[1].status == SurveyEntry::Status::SingularFibre);  // 2G = O

    CHECK_THROWS_AS(survey_multiples(s2s, kG, 0), InvalidInput);
}

TEST_CASE("survey reports the last completed multiple when the bound is hit") {
    BundleSpec s2s = BundleSpec::sums_of_two_squares(kE2);
    // tiny factor bound: y(3G) = -66234835/5000211 has the factor 4339
    SurveyResult res = survey_multiples(s2s, kG, 10, 100);
    CHECK(res.abort_reason.has_value());
    CHECK(res.completed < 10);
    CHECK(res.completed == static_cast<int>(res.entries.size()));
}

}  // TEST_SUITE
