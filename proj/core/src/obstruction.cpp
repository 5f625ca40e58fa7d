#include "conicbr/obstruction.hpp"

#include <algorithm>

#include "conicbr/errors.hpp"

namespace conicbr {

int inv_real(const Rat& a, int value_sign) {
    return (sgn(a) < 0 && value_sign < 0) ? 1 : 0;
}

namespace {

Rat cubic_at(const Curve& E, const Rat& x) { return x * x * x + E.A * x + E.B; }

// bracket and bisect the single real root of x^3 + Ax + B (connected case)
std::pair<Rat, Rat> isolate_real_root(const Curve& E, const Rat& width) {
    Rat bound = Rat(1) + abs(E.A) + abs(E.B);  // Cauchy bound
    Rat lo = -bound, hi = bound;
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        Rat v = cubic_at(E, mid);
        if (v == 0) {
            // rational root: shrink a hair to keep the invariant c(hi) > 0
            Rat eps = (hi - lo) / 4;
            lo = mid - eps;
            hi = mid + eps;
            if (hi - lo <= width) break;
            continue;
        }
        (sgn(v) < 0 ? lo : hi) = mid;
    }
    return {lo, hi};
}

Rat pow2_inverse(int k) {
    Int d(1);
    d <<= k;
    return make_rat(Int(1), d);
}

}  // namespace

SegmentDecomposition decompose_segments(const Curve& E, const std::vector<CurvePoint>& points) {
    if (real_components(E) != RealComponents::Connected)
        throw NotConnected("E(R) has two components; the segment argument needs a connected locus");
    SegmentDecomposition out;
    for (const CurvePoint& P : points) {
        require_on_curve(E, P);
        if (P.inf) throw PointAtInfinity("segment breakpoints must be affine");
        if (P.y == 0) throw TwoTorsionInS("2-torsion point among the breakpoints");
        out.breakpoints.push_back(P.x);
    }
    std::sort(out.breakpoints.begin(), out.breakpoints.end());
    out.breakpoints.erase(std::unique(out.breakpoints.begin(), out.breakpoints.end()),
                          out.breakpoints.end());

    auto [lo, hi] = isolate_real_root(E, pow2_inverse(20));
    // keep the interval strictly below the first breakpoint
    while (!out.breakpoints.empty() && hi >= out.breakpoints.front()) {
        Rat mid = (lo + hi) / 2;
        (sgn(cubic_at(E, mid)) < 0 ? lo : hi) = mid;
    }
    out.x_min_lo = lo;
    out.x_min_hi = hi;

    Rat left = hi;
    bool first = true;
    for (const Rat& b : out.breakpoints) {
        out.segments.push_back(Segment{left, b, first});
        left = b;
        first = false;
    }
    out.segments.push_back(Segment{left, std::nullopt, first});
    return out;
}

namespace {

// sampling schedule inside one segment: midpoint, then dyadic refinements
// toward both endpoints; on the unbounded segment a geometric march right
std::vector<Rat> segment_samples(const Segment& seg, int depth) {
    std::vector<Rat> xs;
    if (!seg.hi) {
        Rat step(1);
        for (int k = 0; k <= depth; ++k) {
            xs.push_back(seg.lo + step);
            step *= 2;
        }
        return xs;
    }
    Rat w = *seg.hi - seg.lo;
    if (sgn(w) <= 0) return xs;
    xs.push_back(seg.lo + w / 2);
    for (int d = 2; d <= depth; ++d) {
        Rat off = w * pow2_inverse(d);
        xs.push_back(seg.lo + off);
        xs.push_back(*seg.hi - off);
    }
    return xs;
}

struct LineData {
    LinearForm form;
    CurvePoint tangency;
};

}  // namespace

ObstructionCertificate find_certificate(const BundleSpec& spec, const ObstructionOptions& opts) {
    if (spec.flavor != BundleFlavor::Chatelet)
        throw HypothesisFailed("obstruction search needs the chatelet family (f a product of x - x_i)");
    int n = static_cast<int>(spec.points.size());
    if (n <= 2) throw HypothesisFailed("n > 2 required");
    if (sgn(spec.a) >= 0) throw HypothesisFailed("a < 0 required");
    if (real_components(spec.E) != RealComponents::Connected)
        throw HypothesisFailed("E(R) must be connected");
    for (const CurvePoint& P : spec.points)
        if (!P.inf && P.y == 0) throw HypothesisFailed("points must avoid 2-torsion");

    // y > 0 representatives, sorted by x; indices below are 1-based
    std::vector<CurvePoint> reps;
    for (const CurvePoint& P : spec.points) reps.push_back(sgn(P.y) > 0 ? P : neg(P));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    int nn = static_cast<int>(reps.size());
    if (nn <= 2) throw HypothesisFailed("fewer than 3 distinct fibres after identifying P with -P");

    SegmentDecomposition segs = decompose_segments(spec.E, reps);

    std::vector<std::pair<int, int>> pairs;
    if (opts.forced_pair) {
        auto [i, j] = *opts.forced_pair;
        if (i < 1 || j < 1 || i > nn || j > nn || i == j)
            throw InvalidInput("line pair indices out of range");
        pairs.emplace_back(std::min(i, j), std::max(i, j));
    } else {
        if (nn >= 3) pairs.emplace_back(1, 3);
        for (int i = 1; i <= nn; ++i)
            for (int j = i + 1; j <= nn; ++j)
                if (!(i == 1 && j == 3)) pairs.emplace_back(i, j);
    }

    std::vector<std::optional<LineData>> lines(static_cast<size_t>(nn) + 1);
    auto line_at = [&](int idx) -> const LineData& {
        auto& slot = lines[static_cast<size_t>(idx)];
        if (!slot) {
            const CurvePoint& P = reps[static_cast<size_t>(idx - 1)];
            std::vector<CurvePoint> halves = halve(spec.E, neg(P));
            if (halves.empty())
                throw HypothesisFailed("point (" + rat_str(P.x) + ", " + rat_str(P.y) +
                                       ") is not divisible by 2 in E(Q)");
            slot = LineData{tangent_line(spec.E, halves.front()), halves.front()};
        }
        return *slot;
    };

    for (const auto& [i, j] : pairs) {
        const LineData& li = line_at(i);
        const LineData& lj = line_at(j);
        FnElement ratio;
        ratio.mul(LineAtom{li.form}, 1).mul(LineAtom{lj.form}, -1);

        std::optional<Rat> first_pos, first_neg;
        for (const Segment& seg : segs.segments) {
            for (const Rat& x : segment_samples(seg, opts.sample_depth)) {
                if (sign_on_upper_branch(spec.E, spec.coefficient, x) != 1) continue;
                int rs = sign_on_upper_branch(spec.E, ratio, x);
                if (rs > 0 && !first_pos) first_pos = x;
                if (rs < 0 && !first_neg) first_neg = x;
                if (first_pos && first_neg) break;
            }
            if (first_pos && first_neg) break;
        }
        if (first_pos && first_neg) {
            ObstructionCertificate cert;
            cert.b.a = spec.a;
            cert.b.f = ratio;
            cert.r1_x = *first_pos;
            cert.r2_x = *first_neg;
            cert.inv_values = {inv_real(spec.a, +1), inv_real(spec.a, -1)};
            cert.f_signs = {1, 1};
            cert.line_pair = {i, j};
            cert.l_i = li.form;
            cert.l_j = lj.form;
            cert.q_i = li.tangency;
            cert.q_j = lj.tangency;
            return cert;
        }
    }
    throw SearchExhausted("no sample pair with opposite invariants at depth " +
                          std::to_string(opts.sample_depth));
}

bool certificate_valid(const BundleSpec& spec, const ObstructionCertificate& cert) {
    FnElement ratio;
    ratio.mul(LineAtom{cert.l_i}, 1).mul(LineAtom{cert.l_j}, -1);
    int f1 = sign_on_upper_branch(spec.E, spec.coefficient, cert.r1_x);
    int f2 = sign_on_upper_branch(spec.E, spec.coefficient, cert.r2_x);
    if (f1 != 1 || f2 != 1) return false;
    int s1 = sign_on_upper_branch(spec.E, ratio, cert.r1_x);
    int s2 = sign_on_upper_branch(spec.E, ratio, cert.r2_x);
    if (s1 == 0 || s2 == 0) return false;
    int i1 = inv_real(spec.a, s1), i2 = inv_real(spec.a, s2);
    return i1 == cert.inv_values[0] && i2 == cert.inv_values[1] && i1 != i2;
}

}  // namespace conicbr
