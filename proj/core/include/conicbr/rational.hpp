#ifndef CONICBR_RATIONAL_HPP
#define CONICBR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "conicbr/errors.hpp"

namespace conicbr {

// All field elements are exact rationals backed by GMP. mpq_class results of
// arithmetic are always in lowest terms with positive denominator; the only
// way to produce a non-canonical value is the raw two-argument constructor,
// so construction goes through make_rat / parse_rat.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

// Accepts "num", "num/den", optional leading '-'.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty rational literal");
    for (char c : s) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw InvalidInput("bad rational literal: " + s);
    }
    try {
        Rat q(s);
        if (q.get_den() == 0) throw InvalidInput("zero denominator in: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("bad rational literal: " + s);
    }
}

// "num/den", den omitted when 1.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& n) { return sgn(n); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// True iff q is the square of a rational; root receives the nonnegative root.
inline bool is_rational_square(const Rat& q, Rat* root = nullptr) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return false;
    if (root) {
        Int n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
        *root = make_rat(n, d);
    }
    return true;
}

}  // namespace conicbr

#endif
