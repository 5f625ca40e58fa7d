#ifndef CONICBR_CONIC_BUNDLE_HPP
#define CONICBR_CONIC_BUNDLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "conicbr/brauer.hpp"

namespace conicbr {

enum class BundleFlavor { Chatelet, SumsOfTwoSquares, Custom };

// Conic bundle x0^2 - a x1^2 = f x2^2 over E, where f is the coefficient
// function. Chatelet: f = prod(x - x_i) over given points P_i != O.
// SumsOfTwoSquares: a = -1, f = y.
struct BundleSpec {
    Curve E;
    Rat a;
    FnElement coefficient;
    BundleFlavor flavor = BundleFlavor::Custom;
    std::vector<CurvePoint> points;  // Chatelet only

    static BundleSpec chatelet(Curve E, Rat a, std::vector<CurvePoint> points,
                               long bound = kDefaultFactorBound);
    static BundleSpec sums_of_two_squares(Curve E);
    static BundleSpec custom(Curve E, Rat a, FnElement f, long bound = kDefaultFactorBound);
};

struct SingularLocus {
    std::vector<CurvePoint> points;  // where the coefficient has odd valuation
    int n = 0;                       // Chatelet: number of given points
    int t = 0;                       // Chatelet: how many of them are 2-torsion
    std::vector<CurvePoint> stated_points;  // closed-form locus for the family
    bool stated_matches_engine = true;
    std::optional<std::string> warning;
};

QuaternionClass generic_fibre_class(const BundleSpec& spec);

// Points with nontrivial residue of the generic-fibre class, from valuation
// parity over the candidate set of the flavor. The closed-form locus of the
// family is recorded alongside; a mismatch raises a structured warning and
// the parity locus is what downstream computations use.
SingularLocus singular_locus(const BundleSpec& spec, long bound = kDefaultFactorBound);

// 2n-t-1 for odd n, 2n-t-2 for even n.
int corollary_rank(int n, int t);

// Solvability of the fibre conic over Q_v / over Q at a smooth fibre.
bool fibre_has_local_point(const BundleSpec& spec, const CurvePoint& P, const Place& v,
                           long bound = kDefaultFactorBound);
bool fibre_has_rational_point(const BundleSpec& spec, const CurvePoint& P,
                              long bound = kDefaultFactorBound);

struct SurveyEntry {
    int m = 0;
    CurvePoint point;
    enum class Status { HasPoint, NoPoint, SingularFibre } status = Status::SingularFibre;
};

struct SurveyResult {
    std::vector<SurveyEntry> entries;
    int completed = 0;  // largest m with a decided entry
    std::optional<std::string> abort_reason;
};

// Fibres over m*G for m = 1..max_multiple. Stops early (recording the
// reason) if a factor bound is exceeded; singular fibres are flagged, not
// decided.
SurveyResult survey_multiples(const BundleSpec& spec, const CurvePoint& G, int max_multiple,
                              long bound = kDefaultFactorBound);

}  // namespace conicbr

#endif
