#include "conicbr/poly.hpp"

#include <algorithm>
#include <random>

#include "conicbr/errors.hpp"
#include "conicbr/factor.hpp"

namespace conicbr {

PolyQ poly_trim(PolyQ p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_degree(const PolyQ& p) { return static_cast<int>(p.size()) - 1; }

Rat poly_eval(const PolyQ& p, const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyQ poly_derivative(const PolyQ& p) {
    PolyQ d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return poly_trim(std::move(d));
}

PolyQ poly_add(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(std::move(r));
}

PolyQ poly_sub(const PolyQ& a, const PolyQ& b) {
    PolyQ r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(std::move(r));
}

PolyQ poly_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return poly_trim(std::move(r));
}

PolyQ poly_scale(const PolyQ& a, const Rat& c) {
    if (c == 0) return {};
    PolyQ r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& num, const PolyQ& den) {
    if (den.empty()) throw InvalidInput("polynomial division by zero");
    PolyQ r = num;
    int dn = poly_degree(r), dd = poly_degree(den);
    if (dn < dd) return {{}, poly_trim(std::move(r))};
    PolyQ q(dn - dd + 1, Rat(0));
    const Rat& lc = den.back();
    for (int i = dn; i >= dd; --i) {
        if (r[i] == 0) continue;
        Rat c = r[i] / lc;
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= c * den[j];
    }
    return {poly_trim(std::move(q)), poly_trim(std::move(r))};
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        PolyQ r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rat inv = 1 / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

std::vector<Int> primitive_integer_poly(const PolyQ& p) {
    PolyQ t = poly_trim(p);
    if (t.empty()) return {};
    Int den_lcm(1);
    for (const Rat& c : t) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> v;
    v.reserve(t.size());
    Int content(0);
    for (const Rat& c : t) {
        Int x = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        v.push_back(std::move(x));
    }
    if (v.back() < 0) content = -content;
    for (Int& x : v) x /= content;
    return v;
}

int root_multiplicity(const PolyQ& p, const Rat& r) {
    PolyQ cur = poly_trim(p);
    if (cur.empty()) throw InvalidInput("root multiplicity in zero polynomial");
    PolyQ lin{-r, Rat(1)};
    int m = 0;
    while (poly_degree(cur) >= 1 && poly_eval(cur, r) == 0) {
        auto [q, rem] = poly_divmod(cur, lin);
        cur = std::move(q);
        ++m;
    }
    return m;
}

namespace {

// ---- polynomial arithmetic mod m (coefficients in [0, m)) ----

using PolyZ = std::vector<Int>;

PolyZ ztrim(PolyZ p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

PolyZ zreduce(const std::vector<Int>& p, const Int& m) {
    PolyZ r;
    r.reserve(p.size());
    for (const Int& c : p) {
        Int x = c % m;
        if (x < 0) x += m;
        r.push_back(std::move(x));
    }
    return ztrim(std::move(r));
}

Int zeval(const PolyZ& p, const Int& x, const Int& m) {
    Int acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = (acc * x + *it) % m;
    return acc;
}

PolyZ zmul(const PolyZ& a, const PolyZ& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    PolyZ r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    return ztrim(std::move(r));
}

PolyZ zsub(const PolyZ& a, const PolyZ& b, const Int& m) {
    PolyZ r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) {
        r[i] = (r[i] - b[i]) % m;
        if (r[i] < 0) r[i] += m;
    }
    return ztrim(std::move(r));
}

Int zinv(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw InvalidInput("non-invertible element in modular arithmetic");
    return r;
}

// remainder of a mod b, b monic-ized on the fly (lc(b) invertible mod p)
PolyZ zrem(PolyZ a, const PolyZ& b, const Int& p) {
    int db = static_cast<int>(b.size()) - 1;
    Int lcinv = zinv(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db) {
        Int c = a.back() * lcinv % p;
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (int j = 0; j <= db; ++j) {
            a[shift + j] = (a[shift + j] - c * b[j]) % p;
            if (a[shift + j] < 0) a[shift + j] += p;
        }
        a = ztrim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

PolyZ zgcd(PolyZ a, PolyZ b, const Int& p) {
    a = ztrim(std::move(a));
    b = ztrim(std::move(b));
    while (!b.empty()) {
        PolyZ r = zrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Int inv = zinv(a.back(), p);
        for (Int& c : a) c = c * inv % p;
    }
    return a;
}

// base^e mod (f, p) by square and multiply
PolyZ zpowmod(const PolyZ& base, const Int& e, const PolyZ& f, const Int& p) {
    PolyZ result{Int(1)};
    PolyZ acc = zrem(base, f, p);
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        result = zrem(zmul(result, result, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = zrem(zmul(result, acc, p), f, p);
    }
    return result;
}

void collect_roots_mod_p(const PolyZ& g, const Int& p, std::mt19937_64& rng, std::vector<Int>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        Int c = g[0] * zinv(g[1], p) % p;
        out.push_back((p - c) % p);
        return;
    }
    // split the product of distinct linear factors with random gcds
    Int half = (p - 1) / 2;
    for (int attempt = 0; attempt < 256; ++attempt) {
        Int a(static_cast<unsigned long>(rng()));
        a %= p;
        PolyZ shifted{a, Int(1)};  // x + a
        PolyZ pw = zpowmod(shifted, half, g, p);
        if (pw.empty())
            pw = PolyZ{p - 1};  // (x+a)^h == 0 means x = -a is a root; pw - 1 = -1
        else {
            pw[0] = (pw[0] + p - 1) % p;
            pw = ztrim(std::move(pw));
        }
        PolyZ h = zgcd(pw, g, p);
        if (!h.empty() && h.size() > 1 && h.size() < g.size()) {
            auto q = [&]() {
                // g / h over F_p
                PolyZ rem = g, quot(g.size() - h.size() + 1, Int(0));
                Int lcinv = zinv(h.back(), p);
                while (static_cast<int>(rem.size()) >= static_cast<int>(h.size())) {
                    Int c = rem.back() * lcinv % p;
                    int shift = static_cast<int>(rem.size() - h.size());
                    quot[shift] = c;
                    for (size_t j = 0; j < h.size(); ++j) {
                        rem[shift + j] = (rem[shift + j] - c * h[j]) % p;
                        if (rem[shift + j] < 0) rem[shift + j] += p;
                    }
                    rem = ztrim(std::move(rem));
                    if (rem.empty()) break;
                }
                return ztrim(std::move(quot));
            }();
            collect_roots_mod_p(h, p, rng, out);
            collect_roots_mod_p(q, p, rng, out);
            return;
        }
    }
    throw InvalidInput("random splitting failed to separate roots mod p");
}

// reconstruct s/t from residue r mod M with |s|, t <= bound (2*bound^2 < M)
bool rational_reconstruct(const Int& r, const Int& M, const Int& bound, Rat* out) {
    Int r0 = M, r1 = r, t0(0), t1(1);
    while (r1 > bound) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound) return false;
    Int s = std::move(r1), t = std::move(t1);
    if (t < 0) {
        s = -s;
        t = -t;
    }
    *out = make_rat(s, t);
    return true;
}

}  // namespace

std::vector<RootWithMultiplicity> rational_roots(const PolyQ& p_in) {
    PolyQ p = poly_trim(p_in);
    if (p.empty()) throw InvalidInput("rational_roots of the zero polynomial");
    std::vector<RootWithMultiplicity> out;
    if (poly_degree(p) == 0) return out;

    // roots at 0
    size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k > 0) {
        out.push_back({Rat(0), static_cast<int>(k)});
        p.erase(p.begin(), p.begin() + static_cast<long>(k));
    }
    if (poly_degree(p) == 0) return out;

    // squarefree part (one copy of every distinct root)
    PolyQ g = poly_gcd(p, poly_derivative(p));
    PolyQ sf = poly_degree(g) > 0 ? poly_divmod(p, g).first : p;
    std::vector<Int> S = primitive_integer_poly(sf);

    if (S.size() == 2) {
        Rat r = make_rat(-S[0], S[1]);
        out.push_back({r, root_multiplicity(p, r)});
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.root < b.root; });
        return out;
    }

    // any rational root s/t in lowest terms has s | S[0], t | lc
    Int bound = std::max(abs(S[0]), abs(S.back()));
    Int target = 2 * bound * bound + 1;

    // prime with lc invertible and S squarefree mod p
    Int prime;
    mpz_ui_pow_ui(prime.get_mpz_t(), 2, 62);
    PolyZ Sp, Dp;
    for (int tries = 0;; ++tries) {
        if (tries > 200) throw InvalidInput("could not find a usable prime for root finding");
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        if (certify_prime(prime) != Primality::Prime) continue;
        if (mpz_divisible_p(S.back().get_mpz_t(), prime.get_mpz_t())) continue;
        Sp = zreduce(S, prime);
        std::vector<Int> d;
        for (size_t i = 1; i < S.size(); ++i) d.push_back(S[i] * static_cast<long>(i));
        Dp = zreduce(d, prime);
        if (zgcd(Sp, Dp, prime).size() == 1) break;  // squarefree mod p
    }

    // distinct roots mod p: gcd(x^p - x, S)
    PolyZ xp = zpowmod(PolyZ{Int(0), Int(1)}, prime, Sp, prime);
    PolyZ lin = zsub(xp, PolyZ{Int(0), Int(1)}, prime);
    PolyZ g1 = zgcd(lin, Sp, prime);
    std::vector<Int> roots_p;
    std::mt19937_64 rng(0x5eedc0de1234abcdULL);
    collect_roots_mod_p(g1, prime, rng, roots_p);

    // Hensel-lift each simple root until the modulus dominates 2*bound^2,
    // then reconstruct s/t and verify exactly.
    for (const Int& r0 : roots_p) {
        Int modulus = prime;
        Int r = r0;
        while (modulus < target) {
            Int m2 = modulus * modulus;
            PolyZ Sm = zreduce(S, m2);
            std::vector<Int> d;
            for (size_t i = 1; i < S.size(); ++i) d.push_back(S[i] * static_cast<long>(i));
            PolyZ Dm = zreduce(d, m2);
            Int fr = zeval(Sm, r, m2);
            Int dr = zeval(Dm, r, m2);
            Int g_, inv;
            mpz_gcd(g_.get_mpz_t(), dr.get_mpz_t(), m2.get_mpz_t());
            if (g_ != 1) throw InvalidInput("Hensel lift hit a singular point");
            inv = zinv(dr, m2);
            r = (r - fr * inv) % m2;
            if (r < 0) r += m2;
            modulus = std::move(m2);
        }
        Rat cand;
        if (!rational_reconstruct(r, modulus, bound, &cand)) continue;
        if (poly_eval(sf, cand) != 0) continue;
        out.push_back({cand, root_multiplicity(p, cand)});
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
    return out;
}

}  // namespace conicbr
