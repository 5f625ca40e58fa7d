#ifndef CONICBR_BRAUER_HPP
#define CONICBR_BRAUER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conicbr/function_field.hpp"
#include "conicbr/symbols.hpp"

namespace conicbr {

// Class of the quaternion algebra (a, f) in Br(Q(E))[2], a a nonsquare
// rational constant.
struct QuaternionClass {
    Rat a;
    FnElement f;
};

// Residue of (a, f) at a rational point P: the class of a^{v_P(f)}, i.e.
// square_class(a) when v_P(f) is odd and trivial when even.
SquareClass residue(const Curve& E, const QuaternionClass& cls, const CurvePoint& P,
                    long bound = kDefaultFactorBound);

struct ResidueVector {
    std::vector<uint8_t> bits;         // 1 where the residue is nontrivial
    std::vector<SquareClass> classes;  // the residue class at each point
    std::string bit_string() const;
};

ResidueVector residue_vector(const Curve& E, const QuaternionClass& cls,
                             const std::vector<CurvePoint>& S, long bound = kDefaultFactorBound);

// Rank over F2 by Gaussian elimination; rows must have equal lengths.
int f2_rank(const std::vector<std::vector<uint8_t>>& rows);

// Rank of span(rows) / <pivot>: rank(rows + pivot) minus one when the pivot
// is nonzero.
int f2_quotient_rank(const std::vector<std::vector<uint8_t>>& rows, const std::vector<uint8_t>& pivot);

// Generator B_P = (a, l_P / l_P0) where l_P is the tangent at the chosen
// half Q_P with -2 Q_P = P; when P (or P0) is O its line degenerates to Z
// and the factor is dropped. Q_P is the least rational half of -P.
struct Generator {
    CurvePoint P;
    std::optional<CurvePoint> half_witness;  // Q_P; absent when P = O
    QuaternionClass cls;
};

Generator make_generator(const Curve& E, const Rat& a, const CurvePoint& P, const CurvePoint& P0,
                         long bound = kDefaultFactorBound);

struct HypothesisChecks {
    bool s_in_2e = false;
    std::vector<std::pair<CurvePoint, CurvePoint>> halving_witnesses;  // (P, Q) with 2Q = P
    bool f_p_all_equal = false;
    bool a_ramifies = false;
    bool locus_size_ok = true;
    std::vector<std::string> failures;
    bool all_pass() const { return s_in_2e && f_p_all_equal && a_ramifies && locus_size_ok; }
};

struct ResidueMatrix {
    std::vector<CurvePoint> points;
    struct Row {
        std::string label;
        std::vector<uint8_t> bits;
    };
    std::vector<Row> rows;                     // generator rows
    std::vector<uint8_t> pivot;                // residues of the generic-fibre class
    std::vector<SquareClass> residue_classes;  // common nontrivial class per point
};

struct BrauerReport {
    std::vector<CurvePoint> S;
    HypothesisChecks checks;
    std::optional<int> theorem_rank;  // |S| - 2, present only when all checks pass
    int upper_bound_rank = 0;
    std::optional<CurvePoint> p0;
    std::vector<Generator> generators;
    ResidueMatrix matrix;
};

// Hypothesis verification, generator construction and both ranks for the
// singular locus S of the class A = (a, f). Hypothesis failures are
// recorded in the report, not thrown.
BrauerReport compute_brauer_group(const Curve& E, const Rat& a, const QuaternionClass& A,
                                  const std::vector<CurvePoint>& S, long bound = kDefaultFactorBound);

}  // namespace conicbr

#endif
