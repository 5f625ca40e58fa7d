#include "conicbr/brauer.hpp"

#include <algorithm>

#include "conicbr/errors.hpp"

namespace conicbr {

SquareClass residue(const Curve& E, const QuaternionClass& cls, const CurvePoint& P, long bound) {
    long v = valuation(E, cls.f, P);
    if (v % 2 == 0) return SquareClass{Int(1)};
    return square_class(cls.a, bound);
}

std::string ResidueVector::bit_string() const {
    std::string s;
    s.reserve(bits.size());
    for (uint8_t b : bits) s.push_back(b ? '1' : '0');
    return s;
}

ResidueVector residue_vector(const Curve& E, const QuaternionClass& cls,
                             const std::vector<CurvePoint>& S, long bound) {
    ResidueVector out;
    for (const CurvePoint& P : S) {
        SquareClass r = residue(E, cls, P, bound);
        out.bits.push_back(r.trivial() ? 0 : 1);
        out.classes.push_back(std::move(r));
    }
    return out;
}

int f2_rank(const std::vector<std::vector<uint8_t>>& rows) {
    if (rows.empty()) return 0;
    size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw LengthMismatch("rows of unequal length in F2 rank");
    std::vector<std::vector<uint8_t>> m = rows;
    int rank = 0;
    for (size_t col = 0; col < n && rank < static_cast<int>(m.size()); ++col) {
        size_t piv = m.size();
        for (size_t r = rank; r < m.size(); ++r)
            if (m[r][col]) {
                piv = r;
                break;
            }
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(r) != rank && m[r][col])
                for (size_t c = 0; c < n; ++c) m[r][c] ^= m[rank][c];
        }
        ++rank;
    }
    return rank;
}

int f2_quotient_rank(const std::vector<std::vector<uint8_t>>& rows, const std::vector<uint8_t>& pivot) {
    for (const auto& r : rows)
        if (r.size() != pivot.size()) throw LengthMismatch("pivot length does not match rows");
    std::vector<std::vector<uint8_t>> all = rows;
    all.push_back(pivot);
    int rank = f2_rank(all);
    bool pivot_nonzero = std::any_of(pivot.begin(), pivot.end(), [](uint8_t b) { return b != 0; });
    return rank - (pivot_nonzero ? 1 : 0);
}

namespace {

// least rational half of -P; NotDivisibleBy2 when none exists
CurvePoint canonical_half_of_neg(const Curve& E, const CurvePoint& P, const char* role) {
    std::vector<CurvePoint> halves = halve(E, neg(P));
    if (halves.empty())
        throw NotDivisibleBy2(std::string(role) + " (" + rat_str(P.x) + ", " + rat_str(P.y) +
                              ") has no rational point Q with -2Q = P");
    return halves.front();  // halve() returns sorted points
}

}  // namespace

Generator make_generator(const Curve& E, const Rat& a, const CurvePoint& P, const CurvePoint& P0,
                         long bound) {
    if (square_class(a, bound).trivial())
        throw InvalidInput("quaternion class with square a = " + rat_str(a));
    require_on_curve(E, P);
    require_on_curve(E, P0);

    Generator out;
    out.P = P;
    out.cls.a = a;
    if (P == P0) return out;  // trivial class, f = 1

    if (!P.inf) {
        CurvePoint qp = canonical_half_of_neg(E, P, "generator point");
        out.half_witness = qp;
        out.cls.f.mul(LineAtom{tangent_line(E, qp)}, 1);
    }
    if (!P0.inf) {
        CurvePoint qp0 = canonical_half_of_neg(E, P0, "base point");
        out.cls.f.mul(LineAtom{tangent_line(E, qp0)}, -1);
    }
    return out;
}

BrauerReport compute_brauer_group(const Curve& E, const Rat& a, const QuaternionClass& A,
                                  const std::vector<CurvePoint>& S, long bound) {
    if (S.empty()) throw InvalidInput("empty singular locus");
    for (const CurvePoint& P : S) require_on_curve(E, P);
    {
        std::vector<CurvePoint> dedup = S;
        std::sort(dedup.begin(), dedup.end());
        if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
            throw InvalidInput("duplicate point in S");
    }

    BrauerReport rep;
    rep.S = S;
    rep.matrix.points = S;

    SquareClass a_class = square_class(a, bound);
    ResidueVector rv = residue_vector(E, A, S, bound);
    rep.matrix.pivot = rv.bits;
    rep.matrix.residue_classes = rv.classes;

    // A must ramify at every point of the locus, with one common class
    // matching a.
    rep.checks.a_ramifies =
        std::any_of(rv.bits.begin(), rv.bits.end(), [](uint8_t b) { return b != 0; });
    if (!rep.checks.a_ramifies) rep.checks.failures.push_back("A is unramified on S");
    bool all_nontrivial = true, all_equal_a = true;
    for (const SquareClass& c : rv.classes) {
        if (c.trivial())
            all_nontrivial = false;
        else if (c != a_class)
            all_equal_a = false;
    }
    rep.checks.f_p_all_equal = all_nontrivial && all_equal_a;
    if (!all_nontrivial)
        rep.checks.failures.push_back("residue of A trivial at some point of S");
    else if (!all_equal_a)
        rep.checks.failures.push_back("residue classes of A on S do not all equal class of a");

    // S contained in 2E(Q): collect halving witnesses
    rep.checks.s_in_2e = true;
    for (const CurvePoint& P : S) {
        std::vector<CurvePoint> hs = halve(E, P);
        if (hs.empty()) {
            rep.checks.s_in_2e = false;
            rep.checks.failures.push_back("point (" + rat_str(P.x) + ", " + rat_str(P.y) +
                                          ") is not divisible by 2 in E(Q)");
        } else {
            rep.checks.halving_witnesses.emplace_back(P, hs.front());
        }
    }

    int nS = static_cast<int>(S.size());
    if (nS < 2) {
        // a full singular locus has even size (valuation parities sum to 0),
        // so a single ramified point cannot be all of it
        rep.checks.locus_size_ok = false;
        rep.checks.failures.push_back("S has fewer than 2 points and cannot be a full singular locus");
    }
    if (!rep.checks.all_pass()) {
        // upper bound from the residue embedding alone
        rep.upper_bound_rank = nS - (rep.checks.a_ramifies ? 1 : 0);
        return rep;
    }

    rep.p0 = S.front();
    std::vector<std::vector<uint8_t>> rows;
    for (int i = 1; i < nS; ++i) {
        Generator gen = make_generator(E, a, S[static_cast<size_t>(i)], *rep.p0, bound);
        ResidueVector grv = residue_vector(E, gen.cls, S, bound);
        ResidueMatrix::Row row;
        row.label = "B_" + std::to_string(i);
        row.bits = grv.bits;
        rows.push_back(grv.bits);
        rep.matrix.rows.push_back(std::move(row));
        rep.generators.push_back(std::move(gen));
    }

    // the generator rows span a space of dimension |S|-1; modulo the pivot
    // this is the group itself
    int quotient = f2_quotient_rank(rows, rv.bits);
    rep.upper_bound_rank = quotient;
    rep.theorem_rank = nS - 2;
    if (quotient != nS - 2)
        throw InvalidInput("internal inconsistency: generator span has quotient rank " +
                           std::to_string(quotient) + " but |S|-2 = " + std::to_string(nS - 2));
    return rep;
}

}  // namespace conicbr
