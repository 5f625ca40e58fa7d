#include "conicbr/factor.hpp"

#include <algorithm>

#include "conicbr/errors.hpp"

namespace conicbr {

unsigned Factorization::exponent_of(const Int& p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exp;
    return 0;
}

namespace {

// Largest n for which Miller-Rabin with bases 2..37 is a primality proof.
const Int kMrDeterministicLimit("3317044064679887385961981");

bool mr_witness(const Int& a, const Int& n, const Int& d, unsigned s) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Int nm1 = n - 1;
    if (x == 1 || x == nm1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == nm1) return false;
    }
    return true;  // composite witness
}

}  // namespace

Primality certify_prime(const Int& n) {
    if (n < 2) return Primality::Composite;
    static const unsigned long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : small) {
        if (n == p) return Primality::Prime;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::Composite;
    }
    Int d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned long a : small)
        if (mr_witness(Int(a), n, d, s)) return Primality::Composite;
    return n < kMrDeterministicLimit ? Primality::Prime : Primality::Unknown;
}

Factorization factorize(const Int& n, long bound) {
    if (bound < 2) throw InvalidInput("factor bound must be >= 2");
    if (bound > (1L << 31)) throw InvalidInput("factor bound above 2^31 is not supported");
    Factorization out;
    out.sign = sgn(n);
    if (n == 0) throw ZeroInput("factorize(0)");
    Int m = abs(n);
    if (m == 1) return out;

    auto strip = [&](unsigned long d) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
            ++e;
        }
        if (e) out.factors.push_back({Int(d), e});
    };

    strip(2);
    strip(3);
    unsigned long ub = static_cast<unsigned long>(bound);
    // 5,7,11,13,... wheel over residues +-1 mod 6
    for (unsigned long d = 5, step = 2; d <= ub; d += step, step = 6 - step) {
        if (mpz_cmp_ui(m.get_mpz_t(), d * d) < 0) break;
        strip(d);
    }

    // Residual: certify prime / perfect power; otherwise leave incomplete.
    unsigned exp = 1;
    const Int b2 = Int(ub) * Int(ub);
    while (m > 1) {
        if (m <= b2) {
            // no prime factor <= bound, so m is prime
            out.factors.push_back({m, exp});
            m = 1;
            break;
        }
        Primality pr = certify_prime(m);
        if (pr == Primality::Prime) {
            out.factors.push_back({m, exp});
            m = 1;
            break;
        }
        if (pr == Primality::Composite && mpz_perfect_power_p(m.get_mpz_t())) {
            // replace m by its smallest-power root
            unsigned long maxk = mpz_sizeinbase(m.get_mpz_t(), 2);
            bool reduced = false;
            for (unsigned long k = 2; k <= maxk; ++k) {
                Int r;
                if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                    m = r;
                    exp *= static_cast<unsigned>(k);
                    reduced = true;
                    break;
                }
            }
            if (reduced) continue;
        }
        out.residual_base = m;
        out.residual_exp = exp;
        break;
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

Factorization factorize_or_throw(const Int& n, long bound) {
    Factorization f = factorize(n, bound);
    if (!f.complete())
        throw FactorBoundExceeded("cofactor " + f.residual_base.get_str() +
                                  " not factorable with trial bound " + std::to_string(bound));
    return f;
}

std::vector<Int> divisors(const Factorization& f) {
    if (!f.complete()) throw FactorBoundExceeded("divisor enumeration needs a complete factorization");
    std::vector<Int> out{Int(1)};
    for (const auto& pp : f.factors) {
        size_t n = out.size();
        Int pe(1);
        for (unsigned e = 1; e <= pp.exp; ++e) {
            pe *= pp.prime;
            for (size_t i = 0; i < n; ++i) out.push_back(out[i] * pe);
        }
    }
    return out;
}

}  // namespace conicbr
