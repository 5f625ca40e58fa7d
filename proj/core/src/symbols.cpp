#include "conicbr/symbols.hpp"

#include <algorithm>

#include "conicbr/errors.hpp"

namespace conicbr {

SquareClass square_class(const Rat& q, long bound) {
    if (q == 0) throw ZeroInput("square_class(0)");
    Factorization f = factorize(q.get_num() * q.get_den(), bound);
    if (!f.complete() && f.residual_exp % 2 != 0)
        throw FactorBoundExceeded("square class of " + rat_str(q) + ": cofactor " +
                                  f.residual_base.get_str() + " not factored");
    Int v(sgn(q));
    for (const auto& pp : f.factors)
        if (pp.exp % 2) v *= pp.prime;
    return SquareClass{v};
}

int legendre(const Int& a, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw InvalidInput("legendre: modulus " + p.get_str() + " is not an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

long padic_valuation(const Rat& q, const Int& p) {
    if (q == 0) throw ZeroInput("valuation of 0");
    Int tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t()));
    return vn - vd;
}

namespace {

// unit part u of q at p (v_p(q) removed), reduced mod m (m a power of p)
Int unit_mod(const Rat& q, const Int& p, const Int& m) {
    Int n, d;
    mpz_remove(n.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t());
    mpz_remove(d.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t());
    Int dinv;
    if (!mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()))
        throw InvalidInput("unit_mod: non-invertible denominator");
    Int u = n * dinv % m;
    if (u < 0) u += m;
    return u;
}

int eps4(const Int& u) { return u % 4 == 3 ? 1 : 0; }          // (u-1)/2 mod 2
int omega8(const Int& u) {                                     // (u^2-1)/8 mod 2
    Int r = u % 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw ZeroInput("hilbert_symbol with zero argument");
    if (v.is_real) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;

    const Int& p = v.p;
    if (certify_prime(p) == Primality::Composite)
        throw InvalidInput("hilbert_symbol at composite modulus " + p.get_str());
    long alpha = padic_valuation(a, p);
    long beta = padic_valuation(b, p);

    if (p == 2) {
        Int ua = unit_mod(a, p, Int(8));
        Int ub = unit_mod(b, p, Int(8));
        long e = eps4(ua) * eps4(ub) + alpha * omega8(ub) + beta * omega8(ua);
        return e % 2 ? -1 : 1;
    }

    int result = 1;
    if ((alpha * beta) % 2 != 0 && (p % 4 == 3)) result = -result;
    Int ua = unit_mod(a, p, p);
    Int ub = unit_mod(b, p, p);
    if (beta % 2 != 0) result *= legendre(ua, p);
    if (alpha % 2 != 0) result *= legendre(ub, p);
    return result;
}

bool is_sum_of_two_squares(const Rat& q, long bound) {
    if (q == 0) return true;
    if (sgn(q) < 0) return false;
    Factorization f = factorize(q.get_num() * q.get_den(), bound);
    for (const auto& pp : f.factors)
        if (pp.prime % 4 == 3 && pp.exp % 2) return false;
    if (f.complete()) return true;
    if (f.residual_exp % 2 == 0) return true;
    // odd power of a cofactor that is 3 mod 4: some prime 3 mod 4 divides it
    // to odd multiplicity
    if (f.residual_base % 4 == 3) return false;
    throw FactorBoundExceeded("sum-of-two-squares test for " + rat_str(q) + ": cofactor " +
                              f.residual_base.get_str() + " not factored");
}

std::vector<Int> odd_primes_dividing(const std::vector<Rat>& qs, long bound) {
    std::vector<Int> out;
    for (const Rat& q : qs) {
        if (q == 0) throw ZeroInput("odd_primes_dividing(0)");
        Factorization f = factorize_or_throw(q.get_num() * q.get_den(), bound);
        for (const auto& pp : f.factors)
            if (pp.prime != 2) out.push_back(pp.prime);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace conicbr
