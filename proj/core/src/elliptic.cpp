#include "conicbr/elliptic.hpp"

#include <algorithm>

#include "conicbr/errors.hpp"
#include "conicbr/poly.hpp"

namespace conicbr {

Curve Curve::from_ab(Rat A, Rat B) {
    Curve E;
    E.A = std::move(A);
    E.B = std::move(B);
    if (E.disc_term() == 0) throw InvalidInput("singular curve: 4A^3 + 27B^2 = 0");
    return E;
}

Curve Curve::from_roots(const Rat& r1, const Rat& r2, const Rat& r3) {
    if (r1 == r2 || r1 == r3 || r2 == r3) throw InvalidInput("repeated root: curve is singular");
    Rat e1 = r1 + r2 + r3;
    Rat e2 = r1 * r2 + r1 * r3 + r2 * r3;
    Rat e3 = r1 * r2 * r3;
    Rat s = e1 / 3;
    Curve E;
    E.A = e2 - e1 * e1 / 3;
    E.B = -2 * e1 * e1 * e1 / 27 + e1 * e2 / 3 - e3;
    E.x_shift = s;
    E.user_roots = {r1, r2, r3};
    if (E.disc_term() == 0) throw InvalidInput("singular curve from roots");
    return E;
}

LinearForm::LinearForm(Rat a, Rat b, Rat c) : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)) {
    if (is_zero()) return;
    std::vector<Int> prim = primitive_integer_poly(PolyQ{gamma, beta, alpha});
    // primitive_integer_poly keeps the leading (here: first nonzero of
    // alpha, beta, gamma) coefficient positive
    prim.resize(3, Int(0));
    gamma = Rat(prim[0]);
    beta = Rat(prim[1]);
    alpha = Rat(prim[2]);
}

bool on_curve(const Curve& E, const CurvePoint& P) {
    if (P.inf) return true;
    return P.y * P.y == P.x * P.x * P.x + E.A * P.x + E.B;
}

void require_on_curve(const Curve& E, const CurvePoint& P) {
    if (!on_curve(E, P))
        throw PointNotOnCurve("point (" + rat_str(P.x) + ", " + rat_str(P.y) + ") not on y^2 = x^3 + (" +
                              rat_str(E.A) + ")x + (" + rat_str(E.B) + ")");
}

CurvePoint neg(const CurvePoint& P) {
    if (P.inf) return P;
    return CurvePoint::affine(P.x, -P.y);
}

CurvePoint add(const Curve& E, const CurvePoint& P, const CurvePoint& Q) {
    require_on_curve(E, P);
    require_on_curve(E, Q);
    if (P.inf) return Q;
    if (Q.inf) return P;
    if (P.x == Q.x && P.y == -Q.y) return CurvePoint::infinity();
    Rat lam;
    if (P == Q)
        lam = (3 * P.x * P.x + E.A) / (2 * P.y);
    else
        lam = (Q.y - P.y) / (Q.x - P.x);
    Rat x3 = lam * lam - P.x - Q.x;
    Rat y3 = lam * (P.x - x3) - P.y;
    return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint double_point(const Curve& E, const CurvePoint& P) { return add(E, P, P); }

CurvePoint multiple(const Curve& E, long m, const CurvePoint& P) {
    require_on_curve(E, P);
    if (m < 0) return multiple(E, -m, neg(P));
    CurvePoint acc = CurvePoint::infinity();
    CurvePoint base = P;
    while (m) {
        if (m & 1) acc = add(E, acc, base);
        m >>= 1;
        if (m) base = add(E, base, base);
    }
    return acc;
}

std::vector<CurvePoint> two_torsion(const Curve& E) {
    std::vector<CurvePoint> out{CurvePoint::infinity()};
    for (const auto& rm : rational_roots(PolyQ{E.B, E.A, Rat(0), Rat(1)}))
        out.push_back(CurvePoint::affine(rm.root, Rat(0)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CurvePoint> halve(const Curve& E, const CurvePoint& P) {
    require_on_curve(E, P);
    if (P.inf) return two_torsion(E);

    // x(2Q) = x_P with x(2Q) = (x^4 - 2Ax^2 - 8Bx + A^2) / (4(x^3 + Ax + B))
    PolyQ numer{E.A * E.A, -8 * E.B, -2 * E.A, Rat(0), Rat(1)};
    PolyQ denom{E.B, E.A, Rat(0), Rat(1)};
    PolyQ quart = poly_sub(numer, poly_scale(denom, 4 * P.x));

    std::vector<CurvePoint> out;
    for (const auto& rm : rational_roots(quart)) {
        const Rat& xq = rm.root;
        Rat c = xq * xq * xq + E.A * xq + E.B;
        Rat yq;
        if (!is_rational_square(c, &yq)) continue;
        for (const Rat& y : {yq, Rat(-yq)}) {
            CurvePoint Q = CurvePoint::affine(xq, y);
            if (double_point(E, Q) == P) out.push_back(Q);
            if (yq == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LinearForm tangent_line(const Curve& E, const CurvePoint& Q) {
    require_on_curve(E, Q);
    if (Q.inf) throw PointAtInfinity("tangent line requested at O");
    if (Q.y == 0) return LinearForm(Rat(1), Rat(0), -Q.x);
    Rat lam = (3 * Q.x * Q.x + E.A) / (2 * Q.y);
    return LinearForm(lam, Rat(-1), Q.y - lam * Q.x);
}

int intersection_multiplicity(const Curve& E, const LinearForm& l, const CurvePoint& P) {
    if (l.is_zero()) throw DegenerateForm("zero linear form");
    require_on_curve(E, P);
    if (P.inf) {
        if (l.beta != 0) return 3;
        if (l.alpha != 0) return 2;
        return 0;
    }
    if (l.eval_affine(P.x, P.y) != 0) return 0;
    if (l.beta == 0) return P.y == 0 ? 2 : 1;
    // substitute y = -(alpha x + gamma)/beta into the curve equation
    Rat a = l.alpha / l.beta, g = l.gamma / l.beta;
    PolyQ line2 = poly_mul(PolyQ{g, a}, PolyQ{g, a});
    PolyQ cubic = poly_sub(PolyQ{E.B, E.A, Rat(0), Rat(1)}, line2);
    return root_multiplicity(cubic, P.x);
}

long line_valuation(const Curve& E, const LinearForm& l, const CurvePoint& P) {
    int m = intersection_multiplicity(E, l, P);
    return P.inf ? -static_cast<long>(m) : static_cast<long>(m);
}

RealComponents real_components(const Curve& E) {
    return sgn(E.disc_term()) > 0 ? RealComponents::Connected : RealComponents::TwoComponents;
}

}  // namespace conicbr
