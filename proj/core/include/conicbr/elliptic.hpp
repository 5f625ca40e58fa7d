#ifndef CONICBR_ELLIPTIC_HPP
#define CONICBR_ELLIPTIC_HPP

#include <array>
#include <optional>
#include <vector>

#include "conicbr/rational.hpp"

namespace conicbr {

// y^2 = x^3 + A x + B, nonsingular. Curves given by three roots
// y^2 = (x-r1)(x-r2)(x-r3) are depressed on input; x_shift records the
// substitution (user x = internal x + x_shift) so reported coordinates
// can round-trip.
struct Curve {
    Rat A, B;
    Rat x_shift{0};
    std::optional<std::array<Rat, 3>> user_roots;

    static Curve from_ab(Rat A, Rat B);
    static Curve from_roots(const Rat& r1, const Rat& r2, const Rat& r3);

    Rat disc_term() const { return 4 * A * A * A + 27 * B * B; }
    Rat to_user_x(const Rat& x) const { return x + x_shift; }
    Rat from_user_x(const Rat& x) const { return x - x_shift; }

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.A == b.A && a.B == b.B && a.x_shift == b.x_shift;
    }
};

struct CurvePoint {
    bool inf = true;
    Rat x{0}, y{0};

    static CurvePoint infinity() { return CurvePoint{}; }
    static CurvePoint affine(Rat x, Rat y) { return CurvePoint{false, std::move(x), std::move(y)}; }
    bool is_infinity() const { return inf; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
    // affine points ordered by (x, y); the point at infinity sorts last
    friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Projective line alpha*X + beta*Y + gamma*Z on the Weierstrass embedding
// (affine reading alpha*x + beta*y + gamma). Stored primitive-integer with
// the first nonzero coefficient positive; forms are classes up to scaling.
struct LinearForm {
    Rat alpha{0}, beta{0}, gamma{0};

    LinearForm() = default;
    LinearForm(Rat a, Rat b, Rat c);

    bool is_zero() const { return alpha == 0 && beta == 0 && gamma == 0; }
    Rat eval_affine(const Rat& x, const Rat& y) const { return alpha * x + beta * y + gamma; }

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
    }
};

bool on_curve(const Curve& E, const CurvePoint& P);
void require_on_curve(const Curve& E, const CurvePoint& P);

CurvePoint neg(const CurvePoint& P);
CurvePoint add(const Curve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint double_point(const Curve& E, const CurvePoint& P);
CurvePoint multiple(const Curve& E, long m, const CurvePoint& P);

// All rational 2-torsion points, O included; sorted.
std::vector<CurvePoint> two_torsion(const Curve& E);

// All rational Q with 2Q = P, sorted (possibly empty, at most 4).
// halve(O) is the full 2-torsion.
std::vector<CurvePoint> halve(const Curve& E, const CurvePoint& P);

// Tangent line at an affine point; vertical form X - x0*Z when y = 0.
LinearForm tangent_line(const Curve& E, const CurvePoint& Q);

// Intersection multiplicity of the line with E at P (nonnegative). At O
// this is the pole order of l/Z: 3 if beta != 0, 2 if only alpha, 0 for
// the form Z itself.
int intersection_multiplicity(const Curve& E, const LinearForm& l, const CurvePoint& P);

// Signed valuation v_P(l/Z): the multiplicity at affine P, minus the pole
// order at O.
long line_valuation(const Curve& E, const LinearForm& l, const CurvePoint& P);

enum class RealComponents { Connected, TwoComponents };
RealComponents real_components(const Curve& E);

}  // namespace conicbr

#endif
