#ifndef CONICBR_SYMBOLS_HPP
#define CONICBR_SYMBOLS_HPP

#include <string>
#include <vector>

#include "conicbr/factor.hpp"
#include "conicbr/rational.hpp"

namespace conicbr {

// Representative of a class in Q*/Q*^2: a squarefree nonzero integer,
// sign carried.
struct SquareClass {
    Int value{1};
    bool trivial() const { return value == 1; }
    friend bool operator==(const SquareClass& a, const SquareClass& b) { return a.value == b.value; }
    friend bool operator!=(const SquareClass& a, const SquareClass& b) { return !(a == b); }
};

// A place of Q: the real place or a finite prime.
struct Place {
    bool is_real = true;
    Int p{0};
    static Place real() { return Place{}; }
    static Place finite(Int prime) { return Place{false, std::move(prime)}; }
    std::string str() const { return is_real ? "infinity" : p.get_str(); }
    friend bool operator==(const Place& a, const Place& b) {
        return a.is_real == b.is_real && (a.is_real || a.p == b.p);
    }
};

// Squarefree part of q modulo squares. ZeroInput on q == 0;
// FactorBoundExceeded when num*den cannot be fully factored.
SquareClass square_class(const Rat& q, long bound = kDefaultFactorBound);

// Legendre symbol (a/p) for odd prime p.
int legendre(const Int& a, const Int& p);

// Hilbert symbol (a,b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
// Q_v-solution. Closed forms via valuations and Legendre symbols; no
// factorization involved.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// p-adic valuation of a nonzero rational.
long padic_valuation(const Rat& q, const Int& p);

// True iff q = r^2 + s^2 for rationals r, s (q = 0 counts). Decides from a
// partial factorization whenever the answer is already certain; otherwise
// FactorBoundExceeded.
bool is_sum_of_two_squares(const Rat& q, long bound = kDefaultFactorBound);

// Odd primes dividing numerator or denominator of any of the given
// rationals; used to assemble Hasse place lists. Complete or throws.
std::vector<Int> odd_primes_dividing(const std::vector<Rat>& qs, long bound = kDefaultFactorBound);

}  // namespace conicbr

#endif
