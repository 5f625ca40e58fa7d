#ifndef CONICBR_POLY_HPP
#define CONICBR_POLY_HPP

#include <utility>
#include <vector>

#include "conicbr/rational.hpp"

namespace conicbr {

// Dense univariate polynomial over Q; coeffs[i] is the coefficient of x^i.
// Normal form: empty (zero polynomial) or nonzero leading coefficient.
using PolyQ = std::vector<Rat>;

PolyQ poly_trim(PolyQ p);
int poly_degree(const PolyQ& p);  // -1 for the zero polynomial
Rat poly_eval(const PolyQ& p, const Rat& x);
PolyQ poly_derivative(const PolyQ& p);
PolyQ poly_add(const PolyQ& a, const PolyQ& b);
PolyQ poly_sub(const PolyQ& a, const PolyQ& b);
PolyQ poly_mul(const PolyQ& a, const PolyQ& b);
PolyQ poly_scale(const PolyQ& a, const Rat& c);

// Exact quotient and remainder; divisor must be nonzero.
std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& num, const PolyQ& den);

// Monic gcd over Q.
PolyQ poly_gcd(PolyQ a, PolyQ b);

// Clears denominators and content; leading coefficient made positive.
std::vector<Int> primitive_integer_poly(const PolyQ& p);

// Multiplicity of `r` as a root of p (0 when p(r) != 0).
int root_multiplicity(const PolyQ& p, const Rat& r);

struct RootWithMultiplicity {
    Rat root;
    int multiplicity;
};

// All rational roots with multiplicities, sorted ascending. Exact and
// complete for any coefficient size: roots are found modulo a large prime,
// Hensel-lifted, rationally reconstructed, and verified by exact evaluation.
std::vector<RootWithMultiplicity> rational_roots(const PolyQ& p);

}  // namespace conicbr

#endif
