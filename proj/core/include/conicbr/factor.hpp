#ifndef CONICBR_FACTOR_HPP
#define CONICBR_FACTOR_HPP

#include <vector>

#include "conicbr/rational.hpp"

namespace conicbr {

inline constexpr long kDefaultFactorBound = 10'000'000;

struct PrimePower {
    Int prime;
    unsigned exp;
};

// Result of bounded factorization. `factors` holds certified primes only.
// Whatever could not be certified is left in residual_base^residual_exp,
// a cofactor with no prime factor <= the bound used. residual_base == 1
// means the factorization is complete.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;
    Int residual_base = 1;
    unsigned residual_exp = 1;

    bool complete() const { return residual_base == 1; }
    unsigned exponent_of(const Int& p) const;
};

enum class Primality { Composite, Prime, Unknown };

// Deterministic Miller-Rabin; Unknown above the proven 12-base limit
// (~3.3e24) when all bases pass.
Primality certify_prime(const Int& n);

// Trial division up to `bound`, then residual certification (primality or
// perfect power). Never throws for incompleteness; inspect complete().
Factorization factorize(const Int& n, long bound = kDefaultFactorBound);

// Same, but FactorBoundExceeded unless complete.
Factorization factorize_or_throw(const Int& n, long bound = kDefaultFactorBound);

// All positive divisors (unsorted); requires a complete factorization.
std::vector<Int> divisors(const Factorization& f);

}  // namespace conicbr

#endif
