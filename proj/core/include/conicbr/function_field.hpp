#ifndef CONICBR_FUNCTION_FIELD_HPP
#define CONICBR_FUNCTION_FIELD_HPP

#include <variant>
#include <vector>

#include "conicbr/elliptic.hpp"
#include "conicbr/rational.hpp"

namespace conicbr {

// Atoms of the function field Q(E): x - c, the coordinate y, a projective
// line over Z (read as l/Z), and nonzero constants. Elements are kept as
// formal products of atoms; valuations and signs are computed atom-wise
// and never require expanding polynomials.
struct XMinusC {
    Rat c;
    friend bool operator==(const XMinusC& a, const XMinusC& b) { return a.c == b.c; }
};
struct YAtom {
    friend bool operator==(const YAtom&, const YAtom&) { return true; }
};
struct LineAtom {
    LinearForm form;
    friend bool operator==(const LineAtom& a, const LineAtom& b) { return a.form == b.form; }
};
struct ConstAtom {
    Rat value;  // nonzero
    friend bool operator==(const ConstAtom& a, const ConstAtom& b) { return a.value == b.value; }
};
using FnAtom = std::variant<XMinusC, YAtom, LineAtom, ConstAtom>;

struct FnFactor {
    FnAtom atom;
    long exp;
};

struct FnElement {
    std::vector<FnFactor> factors;

    static FnElement one() { return {}; }
    FnElement& mul(FnAtom atom, long exp) {
        if (exp != 0) factors.push_back({std::move(atom), exp});
        return *this;
    }
    FnElement& mul(const FnElement& other, long exp = 1) {
        for (const auto& f : other.factors) mul(f.atom, f.exp * exp);
        return *this;
    }
};

// v_P(atom) at a rational point of E (P = O allowed).
long atom_valuation(const Curve& E, const FnAtom& atom, const CurvePoint& P);

// v_P(f) = sum of exp * v_P(atom).
long valuation(const Curve& E, const FnElement& f, const CurvePoint& P);

// Exact value f(P) at an affine point where every atom is a unit;
// PoleOrZeroAtPoint otherwise (including formally cancelling atoms, which
// the product representation cannot evaluate).
Rat evaluate_exact(const Curve& E, const FnElement& f, const CurvePoint& P);

// Sign of f at the real point (x0, +sqrt(x0^3 + A x0 + B)), decided by
// rational comparisons only. NegativeUnderRoot when the radicand is
// negative; PoleOrZeroAtPoint when f has a pole there.
int sign_on_upper_branch(const Curve& E, const FnElement& f, const Rat& x0);

}  // namespace conicbr

#endif
