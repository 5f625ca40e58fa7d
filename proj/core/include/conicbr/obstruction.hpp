#ifndef CONICBR_OBSTRUCTION_HPP
#define CONICBR_OBSTRUCTION_HPP

#include <array>
#include <optional>
#include <utility>

#include "conicbr/conic_bundle.hpp"

namespace conicbr {

// Local invariant at the real place of (a, r) with sign(r) = value_sign:
// 1 iff a < 0 and the value is negative.
int inv_real(const Rat& a, int value_sign);

// Open intervals of x on the branch y > 0 of a connected real locus,
// cut at the chosen y > 0 representatives of the given points. The left
// end of the first segment is the real root of the cubic, held as an
// exact isolating interval of width <= 2^-20.
struct Segment {
    Rat lo;
    std::optional<Rat> hi;        // nullopt: unbounded to the right
    bool lo_is_branch_end = false;  // lo is the upper end of the root interval
};

struct SegmentDecomposition {
    std::vector<Rat> breakpoints;  // x-coordinates, ascending
    Rat x_min_lo, x_min_hi;        // isolating interval for the cubic's real root
    std::vector<Segment> segments;
};

SegmentDecomposition decompose_segments(const Curve& E, const std::vector<CurvePoint>& points);

// Two real points on the branch y > 0 with opposite real invariants of a
// single class B = (a, l_i / l_j), both on smooth fibres with real points
// (f > 0). r1 carries invariant 0, r2 invariant 1.
struct ObstructionCertificate {
    QuaternionClass b;
    Rat r1_x, r2_x;
    std::array<int, 2> inv_values{0, 1};
    std::array<int, 2> f_signs{1, 1};
    std::pair<int, int> line_pair;  // 1-based indices into the x-sorted points
    LinearForm l_i, l_j;
    CurvePoint q_i, q_j;  // tangency points of the two lines
};

struct ObstructionOptions {
    int sample_depth = 20;
    std::optional<std::pair<int, int>> forced_pair;
    long factor_bound = kDefaultFactorBound;
};

// Searches the segment decomposition for the witness pair, trying lines
// (1,3) first, then all pairs. Deterministic: the first admissible pair of
// samples in (pair, segment, depth) order wins. SearchExhausted when the
// sampling schedule finds none; HypothesisFailed when the configuration is
// outside the supported family (chatelet, n > 2, a < 0, connected real
// locus, no 2-torsion among the points).
ObstructionCertificate find_certificate(const BundleSpec& spec, const ObstructionOptions& opts = {});

// Recomputes every condition of a certificate from scratch.
bool certificate_valid(const BundleSpec& spec, const ObstructionCertificate& cert);

}  // namespace conicbr

#endif
