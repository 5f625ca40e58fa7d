#include "conicbr/conic_bundle.hpp"

#include <algorithm>

#include "conicbr/errors.hpp"
#include "conicbr/poly.hpp"

namespace conicbr {

BundleSpec BundleSpec::chatelet(Curve E, Rat a, std::vector<CurvePoint> points, long bound) {
    if (points.empty()) throw InvalidInput("chatelet bundle needs at least one point");
    if (square_class(a, bound).trivial())
        throw InvalidInput("a = " + rat_str(a) + " is a square; the generic fibre would be split");
    BundleSpec spec;
    spec.flavor = BundleFlavor::Chatelet;
    spec.E = std::move(E);
    spec.a = std::move(a);
    for (const CurvePoint& P : points) {
        require_on_curve(spec.E, P);
        if (P.inf) throw InvalidInput("chatelet points must be affine");
        spec.coefficient.mul(XMinusC{P.x}, 1);
    }
    spec.points = std::move(points);
    return spec;
}

BundleSpec BundleSpec::sums_of_two_squares(Curve E) {
    BundleSpec spec;
    spec.flavor = BundleFlavor::SumsOfTwoSquares;
    spec.E = std::move(E);
    spec.a = Rat(-1);
    spec.coefficient.mul(YAtom{}, 1);
    return spec;
}

BundleSpec BundleSpec::custom(Curve E, Rat a, FnElement f, long bound) {
    if (square_class(a, bound).trivial()) throw InvalidInput("a = " + rat_str(a) + " is a square");
    BundleSpec spec;
    spec.flavor = BundleFlavor::Custom;
    spec.E = std::move(E);
    spec.a = std::move(a);
    spec.coefficient = std::move(f);
    return spec;
}

QuaternionClass generic_fibre_class(const BundleSpec& spec) {
    return QuaternionClass{spec.a, spec.coefficient};
}

namespace {

void push_unique(std::vector<CurvePoint>& v, CurvePoint P) {
    if (std::find(v.begin(), v.end(), P) == v.end()) v.push_back(std::move(P));
}

// rational points where the atom could vanish or have a pole;
// UnsupportedClosedPoint if a zero lives at an irrational closed point
void atom_candidates(const Curve& E, const FnAtom& atom, std::vector<CurvePoint>& out) {
    if (const auto* xc = std::get_if<XMinusC>(&atom)) {
        Rat c2 = xc->c * xc->c * xc->c + E.A * xc->c + E.B;
        Rat y;
        if (!is_rational_square(c2, &y))
            throw UnsupportedClosedPoint("zero of x - (" + rat_str(xc->c) +
                                         ") lies at an irrational closed point");
        push_unique(out, CurvePoint::affine(xc->c, y));
        push_unique(out, CurvePoint::affine(xc->c, -y));
        return;
    }
    if (std::get_if<YAtom>(&atom)) {
        std::vector<CurvePoint> tors = two_torsion(E);
        if (tors.size() != 4)
            throw UnsupportedClosedPoint("y vanishes at irrational 2-torsion of this curve");
        for (const CurvePoint& T : tors)
            if (!T.inf) push_unique(out, T);
        return;
    }
    if (const auto* la = std::get_if<LineAtom>(&atom)) {
        const LinearForm& l = la->form;
        if (l.is_zero()) throw DegenerateForm("zero linear form in coefficient");
        if (l.beta == 0 && l.alpha == 0) return;  // the form Z: a unit in l/Z convention
        if (l.beta == 0) {
            Rat c = -l.gamma / l.alpha;
            atom_candidates(E, XMinusC{c}, out);
            return;
        }
        Rat a = l.alpha / l.beta, g = l.gamma / l.beta;
        PolyQ cubic = poly_sub(PolyQ{E.B, E.A, Rat(0), Rat(1)}, poly_mul(PolyQ{g, a}, PolyQ{g, a}));
        int found = 0;
        for (const auto& rm : rational_roots(cubic)) {
            Rat y = -(a * rm.root + g);
            push_unique(out, CurvePoint::affine(rm.root, y));
            found += rm.multiplicity;
        }
        if (found != 3)
            throw UnsupportedClosedPoint("line in coefficient meets E at an irrational closed point");
        return;
    }
    // constants never vanish
}

}  // namespace

SingularLocus singular_locus(const BundleSpec& spec, long) {
    SingularLocus out;
    const Curve& E = spec.E;

    std::vector<CurvePoint> candidates;
    switch (spec.flavor) {
        case BundleFlavor::Chatelet: {
            for (const CurvePoint& P : spec.points) {
                push_unique(candidates, P);
                push_unique(candidates, neg(P));
            }
            for (const CurvePoint& T : two_torsion(E)) push_unique(candidates, T);
            push_unique(candidates, CurvePoint::infinity());
            break;
        }
        case BundleFlavor::SumsOfTwoSquares: {
            std::vector<CurvePoint> tors = two_torsion(E);
            if (tors.size() != 4)
                throw UnsupportedClosedPoint(
                    "sums-of-two-squares bundle needs full rational 2-torsion; "
                    "the coefficient y vanishes at irrational closed points otherwise");
            for (const CurvePoint& T : tors) push_unique(candidates, T);
            break;
        }
        case BundleFlavor::Custom: {
            for (const auto& fac : spec.coefficient.factors) atom_candidates(E, fac.atom, candidates);
            push_unique(candidates, CurvePoint::infinity());
            break;
        }
    }

    for (const CurvePoint& P : candidates)
        if (valuation(E, spec.coefficient, P) % 2 != 0) out.points.push_back(P);
    std::sort(out.points.begin(), out.points.end());

    // closed-form locus of the family, for comparison
    if (spec.flavor == BundleFlavor::Chatelet) {
        out.n = static_cast<int>(spec.points.size());
        for (const CurvePoint& P : spec.points) {
            if (P.y == 0) ++out.t;
            push_unique(out.stated_points, P);
            push_unique(out.stated_points, neg(P));
        }
        if (out.n % 2 != 0) push_unique(out.stated_points, CurvePoint::infinity());
        std::sort(out.stated_points.begin(), out.stated_points.end());
    } else {
        out.stated_points = out.points;
    }

    out.stated_matches_engine = out.stated_points == out.points;
    if (!out.stated_matches_engine) {
        out.warning =
            "stated singular locus (" + std::to_string(out.stated_points.size()) +
            " points) differs from the locus of odd coefficient valuations (" +
            std::to_string(out.points.size()) +
            " points); downstream computations use the valuation locus";
    }
    return out;
}

int corollary_rank(int n, int t) {
    if (n < 1 || t < 0 || t > n) throw InvalidInput("corollary_rank needs n >= 1, 0 <= t <= n");
    return n % 2 != 0 ? 2 * n - t - 1 : 2 * n - t - 2;
}

bool fibre_has_local_point(const BundleSpec& spec, const CurvePoint& P, const Place& v, long) {
    require_on_curve(spec.E, P);
    if (P.inf) throw PoleOrZeroAtPoint("fibre over O is not an affine fibre of the chart");
    if (valuation(spec.E, spec.coefficient, P) != 0)
        throw PoleOrZeroAtPoint("fibre over (" + rat_str(P.x) + ", " + rat_str(P.y) +
                                ") is singular; solvability is not a boolean here");
    Rat value = evaluate_exact(spec.E, spec.coefficient, P);
    return hilbert_symbol(spec.a, value, v) == 1;
}

bool fibre_has_rational_point(const BundleSpec& spec, const CurvePoint& P, long bound) {
    require_on_curve(spec.E, P);
    if (P.inf) throw PoleOrZeroAtPoint("fibre over O is not an affine fibre of the chart");
    if (valuation(spec.E, spec.coefficient, P) != 0)
        throw PoleOrZeroAtPoint("singular fibre");
    Rat value = evaluate_exact(spec.E, spec.coefficient, P);

    SquareClass a_cls = square_class(spec.a, bound);
    try {
        std::vector<Int> ps = odd_primes_dividing({spec.a, value}, bound);
        bool ok = hilbert_symbol(spec.a, value, Place::real()) == 1 &&
                  hilbert_symbol(spec.a, value, Place::finite(Int(2))) == 1;
        for (const Int& p : ps)
            if (ok) ok = hilbert_symbol(spec.a, value, Place::finite(p)) == 1;
        if (a_cls.value == -1) {
            bool sots = is_sum_of_two_squares(value, bound);
            if (sots != ok)
                throw InvalidInput("internal inconsistency: Hasse test and two-squares test disagree");
        }
        return ok;
    } catch (const FactorBoundExceeded&) {
        // the Hasse place list needs the full factorization; for a ~ -1 the
        // two-squares criterion can still decide from a partial one
        if (a_cls.value == -1) return is_sum_of_two_squares(value, bound);
        throw;
    }
}

SurveyResult survey_multiples(const BundleSpec& spec, const CurvePoint& G, int max_multiple,
                              long bound) {
    require_on_curve(spec.E, G);
    if (max_multiple < 1) throw InvalidInput("max multiple must be >= 1");
    SurveyResult out;
    CurvePoint P = CurvePoint::infinity();
    for (int m = 1; m <= max_multiple; ++m) {
        P = add(spec.E, P, G);
        SurveyEntry e;
        e.m = m;
        e.point = P;
        if (P.inf || valuation(spec.E, spec.coefficient, P) != 0) {
            e.status = SurveyEntry::Status::SingularFibre;
            out.entries.push_back(std::move(e));
            out.completed = m;
            continue;
        }
        try {
            e.status = fibre_has_rational_point(spec, P, bound) ? SurveyEntry::Status::HasPoint
                                                                : SurveyEntry::Status::NoPoint;
        } catch (const FactorBoundExceeded& ex) {
            out.abort_reason = ex.what();
            return out;
        }
        out.entries.push_back(std::move(e));
        out.completed = m;
    }
    return out;
}

}  // namespace conicbr
