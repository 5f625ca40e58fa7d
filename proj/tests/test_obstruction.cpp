#include <doctest.h>

#include "conicbr/errors.hpp"
#include "conicbr/obstruction.hpp"

using namespace conicbr;

namespace {

Rat rq(long n, long d = 1) { return make_rat(n, d); }
const Curve kE2 = Curve::from_ab(rq(0), rq(-2));
const CurvePoint kG = CurvePoint::affine(rq(3), rq(5));

BundleSpec acceptance_bundle() {
    CurvePoint p2 = double_point(kE2, kG);
    CurvePoint p4 = multiple(kE2, 4, kG);
    CurvePoint p6 = multiple(kE2, 6, kG);
    return BundleSpec::chatelet(kE2, rq(-1), {p2, p4, p6});
}

}  // namespace

TEST_SUITE("obstruction") {

TEST_CASE("real invariant of (a, r)") {
    CHECK(inv_real(rq(-1), 1) == 0);
    CHECK(inv_real(rq(-1), -1) == 1);
    CHECK(inv_real(rq(3), -1) == 0);
    CHECK(inv_real(rq(3), 1) == 0);
    CHECK(inv_real(rq(-7, 5), -1) == 1);
}

TEST_CASE("segment decomposition of the connected real locus") {
    CurvePoint p2 = double_point(kE2, kG);
    CurvePoint p4 = multiple(kE2, 4, kG);
    CurvePoint p6 = multiple(kE2, 6, kG);
    SegmentDecomposition segs = decompose_segments(kE2, {p2, p4, p6});
    REQUIRE(segs.breakpoints.size() == 3);
    REQUIRE(segs.segments.size() == 4);
    // x-sorted: x(2G) < x(6G) < x(4G)
    CHECK(segs.breakpoints[0] == p2.x);
    CHECK(segs.breakpoints[1] == p6.x);
    CHECK(segs.breakpoints[2] == p4.x);
    // the root interval isolates cbrt(2) to 2^-20 and sits below x(2G)
    CHECK(segs.x_min_hi - segs.x_min_lo <= rq(1, 1 << 20));
    CHECK(segs.x_min_hi < segs.breakpoints[0]);
    Rat lo3 = segs.x_min_lo * segs.x_min_lo * segs.x_min_lo;
    Rat hi3 = segs.x_min_hi * segs.x_min_hi * segs.x_min_hi;
    CHECK(lo3 < 2);
    CHECK(hi3 > 2);
    CHECK(!segs.segments[3].hi.has_value());

    // input order does not matter
    SegmentDecomposition segs2 = decompose_segments(kE2, {p6, p2, p4});
    CHECK(segs2.breakpoints == segs.breakpoints);

    // no breakpoints: a single unbounded segment
    SegmentDecomposition segs3 = decompose_segments(kE2, {});
    CHECK(segs3.segments.size() == 1);
    CHECK(!segs3.segments[0].hi.has_value());
}

TEST_CASE("segment decomposition rejects bad configurations") {
    Curve two_comp = Curve::from_ab(rq(-1), rq(0));
    CHECK_THROWS_AS(decompose_segments(two_comp, {}), NotConnected);
    Curve conn = Curve::from_roots(rq(-4), rq(-1), rq(0));  // still two components
    CHECK_THROWS_AS(decompose_segments(conn, {}), NotConnected);
    CHECK_THROWS_AS(decompose_segments(kE2, {CurvePoint::infinity()}), PointAtInfinity);
    Curve full = Curve::from_ab(rq(1), rq(0));  // connected, (0,0) is 2-torsion
    CHECK_THROWS_AS(decompose_segments(full, {CurvePoint::affine(rq(0), rq(0))}), TwoTorsionInS);
}

TEST_CASE("certificate on the 2G, 4G, 6G instance") {
    BundleSpec spec = acceptance_bundle();
    ObstructionCertificate cert = find_certificate(spec);
    CHECK(cert.line_pair == std::pair<int, int>{1, 3});
    CHECK(cert.inv_values[0] == 0);
    CHECK(cert.inv_values[1] == 1);
    CHECK(cert.f_signs[0] == 1);
    CHECK(cert.f_signs[1] == 1);
    // line 1 is tangent at G, line 3 tangent at -2G
    CHECK(cert.q_i == kG);
    CHECK(cert.q_j == neg(double_point(kE2, kG)));
    CHECK(cert.l_i == LinearForm(rq(27), rq(-10), rq(-31)));
    CHECK(certificate_valid(spec, cert));

    // recompute both conditions from scratch
    FnElement ratio;
    ratio.mul(LineAtom{cert.l_i}, 1).mul(LineAtom{cert.l_j}, -1);
    CHECK(sign_on_upper_branch(kE2, spec.coefficient, cert.r1_x) == 1);
    CHECK(sign_on_upper_branch(kE2, spec.coefficient, cert.r2_x) == 1);
    CHECK(sign_on_upper_branch(kE2, ratio, cert.r1_x) == 1);
    CHECK(sign_on_upper_branch(kE2, ratio, cert.r2_x) == -1);
}

TEST_CASE("forced pairs also yield certificates when signs differ") {
    BundleSpec spec = acceptance_bundle();
    ObstructionOptions opts;
    opts.forced_pair = {1, 3};
    ObstructionCertificate cert = find_certificate(spec, opts);
    CHECK(certificate_valid(spec, cert));
    opts.forced_pair = {9, 1};
    CHECK_THROWS_AS(find_certificate(spec, opts), InvalidInput);
}

TEST_CASE("the ratio sign is constant within each segment") {
    BundleSpec spec = acceptance_bundle();
    ObstructionCertificate cert = find_certificate(spec);
    FnElement ratio;
    ratio.mul(LineAtom{cert.l_i}, 1).mul(LineAtom{cert.l_j}, -1);
    CurvePoint p2 = double_point(kE2, kG);
    CurvePoint p4 = multiple(kE2, 4, kG);
    CurvePoint p6 = multiple(kE2, 6, kG);
    SegmentDecomposition segs = decompose_segments(kE2, {p2, p4, p6});
    for (const Segment& seg : segs.segments) {
        int seen = 0;
        for (int d = 1; d <= 10; ++d) {
            Rat x = seg.hi ? Rat(seg.lo + (*seg.hi - seg.lo) / (d + 1)) : Rat(seg.lo + rq(d));
            int s = sign_on_upper_branch(kE2, ratio, x);
            if (s == 0) continue;  // tangency point inside the segment
            if (seen == 0)
                seen = s;
            else
                CHECK(s == seen);
        }
    }
}

TEST_CASE("certificate on a second curve with a = -2") {
    // y^2 = x^3 + 8 is connected with generator (1, 3)
    Curve E = Curve::from_ab(rq(0), rq(8));
    CurvePoint G = CurvePoint::affine(rq(1), rq(3));
    BundleSpec spec = BundleSpec::chatelet(
        E, rq(-2), {double_point(E, G), multiple(E, 4, G), multiple(E, 6, G)});
    ObstructionCertificate cert = find_certificate(spec);
    CHECK(certificate_valid(spec, cert));
    CHECK(cert.inv_values[0] != cert.inv_values[1]);
    CHECK(cert.b.a == rq(-2));
    // the tangency points double to the negatives of the chosen fibres
    CHECK(on_curve(E, cert.q_i));
    CHECK(on_curve(E, cert.q_j));
}

TEST_CASE("hypothesis failures") {
    CurvePoint p2 = double_point(kE2, kG);
    CurvePoint p4 = multiple(kE2, 4, kG);

    // n = 2 is too small
    BundleSpec two = BundleSpec::chatelet(kE2, rq(-1), {p2, p4});
    CHECK_THROWS_AS(find_certificate(two), HypothesisFailed);

    // a > 0 has constant invariant 0
    CurvePoint p6 = multiple(kE2, 6, kG);
    BundleSpec pos = BundleSpec::chatelet(kE2, rq(3), {p2, p4, p6});
    CHECK_THROWS_AS(find_certificate(pos), HypothesisFailed);

    // disconnected real locus: y^2 = x^3 - 25x with generator (-4, 6)
    Curve dc = Curve::from_ab(rq(-25), rq(0));
    CurvePoint dg = CurvePoint::affine(rq(-4), rq(6));
    BundleSpec disc = BundleSpec::chatelet(
        dc, rq(-1), {dg, double_point(dc, dg), multiple(dc, 3, dg)});
    CHECK_THROWS_AS(find_certificate(disc), HypothesisFailed);

    // sums-of-two-squares flavor is outside the supported family
    BundleSpec s2s = BundleSpec::sums_of_two_squares(Curve::from_roots(rq(0), rq(1), rq(-1)));
    CHECK_THROWS_AS(find_certificate(s2s), HypothesisFailed);
}

TEST_CASE("search exhaustion is reported, never fabricated") {
    // l_2/l_3 has the same sign on both segments where f > 0, so forcing the
    // pair (2,3) must exhaust the schedule instead of inventing a witness
    BundleSpec spec = acceptance_bundle();
    ObstructionOptions opts;
    opts.forced_pair = {2, 3};
    opts.sample_depth = 8;
    CHECK_THROWS_AS(find_certificate(spec, opts), SearchExhausted);

    // pair (1,2) separates the same segments and does produce a witness
    opts.forced_pair = {1, 2};
    ObstructionCertificate cert = find_certificate(spec, opts);
    CHECK(cert.line_pair == std::pair<int, int>{1, 2});
    CHECK(certificate_valid(spec, cert));
}

}  // TEST_SUITE
