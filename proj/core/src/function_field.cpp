#include "conicbr/function_field.hpp"

#include "conicbr/errors.hpp"

namespace conicbr {

long atom_valuation(const Curve& E, const FnAtom& atom, const CurvePoint& P) {
    require_on_curve(E, P);
    if (const auto* xc = std::get_if<XMinusC>(&atom)) {
        // vertical line (X - c Z)/Z
        return line_valuation(E, LinearForm(Rat(1), Rat(0), -xc->c), P);
    }
    if (std::get_if<YAtom>(&atom)) {
        if (P.inf) return -3;
        return P.y == 0 ? 1 : 0;
    }
    if (const auto* la = std::get_if<LineAtom>(&atom)) {
        return line_valuation(E, la->form, P);
    }
    return 0;  // constants
}

long valuation(const Curve& E, const FnElement& f, const CurvePoint& P) {
    long v = 0;
    for (const auto& fac : f.factors) v += fac.exp * atom_valuation(E, fac.atom, P);
    return v;
}

namespace {

Rat atom_value(const FnAtom& atom, const CurvePoint& P) {
    if (const auto* xc = std::get_if<XMinusC>(&atom)) return P.x - xc->c;
    if (std::get_if<YAtom>(&atom)) return P.y;
    if (const auto* la = std::get_if<LineAtom>(&atom)) return la->form.eval_affine(P.x, P.y);
    return std::get<ConstAtom>(atom).value;
}

Rat rat_pow(const Rat& base, long e) {
    Rat acc(1);
    Rat b = e < 0 ? Rat(1) / base : base;
    for (long i = 0, n = e < 0 ? -e : e; i < n; ++i) acc *= b;
    return acc;
}

}  // namespace

Rat evaluate_exact(const Curve& E, const FnElement& f, const CurvePoint& P) {
    require_on_curve(E, P);
    if (P.inf) throw PoleOrZeroAtPoint("evaluation at O not supported");
    Rat acc(1);
    for (const auto& fac : f.factors) {
        Rat v = atom_value(fac.atom, P);
        if (v == 0)
            throw PoleOrZeroAtPoint("atom vanishes at (" + rat_str(P.x) + ", " + rat_str(P.y) + ")");
        acc *= rat_pow(v, fac.exp);
    }
    return acc;
}

namespace {

// sign of f at (x0, +sqrt(c)) where c = x0^3 + A x0 + B >= 0
int atom_sign_upper(const FnAtom& atom, const Rat& x0, const Rat& c) {
    if (const auto* xc = std::get_if<XMinusC>(&atom)) return sgn(x0 - xc->c);
    if (std::get_if<YAtom>(&atom)) return c == 0 ? 0 : 1;
    if (const auto* ca = std::get_if<ConstAtom>(&atom)) return sgn(ca->value);
    const LinearForm& l = std::get<LineAtom>(atom).form;
    // sign of t + beta*sqrt(c) with t = alpha*x0 + gamma
    Rat t = l.alpha * x0 + l.gamma;
    if (l.beta == 0 || c == 0) return sgn(t);
    if (t == 0) return sgn(l.beta);
    if (sgn(t) == sgn(l.beta)) return sgn(t);
    int s = sgn(t * t - l.beta * l.beta * c);
    return sgn(t) > 0 ? s : -s;
}

}  // namespace

int sign_on_upper_branch(const Curve& E, const FnElement& f, const Rat& x0) {
    Rat c = x0 * x0 * x0 + E.A * x0 + E.B;
    if (sgn(c) < 0)
        throw NegativeUnderRoot("x = " + rat_str(x0) + " is not on the real locus");
    int total = 1;
    bool hit_zero = false;
    for (const auto& fac : f.factors) {
        int s = atom_sign_upper(fac.atom, x0, c);
        if (s == 0) {
            if (fac.exp < 0)
                throw PoleOrZeroAtPoint("pole on the branch at x = " + rat_str(x0));
            hit_zero = true;
        } else if (fac.exp % 2 != 0) {
            total *= s;
        }
    }
    return hit_zero ? 0 : total;
}

}  // namespace conicbr
