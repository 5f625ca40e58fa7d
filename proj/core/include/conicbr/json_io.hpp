#ifndef CONICBR_JSON_IO_HPP
#define CONICBR_JSON_IO_HPP

#include <json.hpp>

#include "conicbr/brauer.hpp"
#include "conicbr/conic_bundle.hpp"
#include "conicbr/obstruction.hpp"

namespace conicbr {

// Key order is kept stable so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// Rationals travel as "num/den" strings (den omitted when 1); all point and
// line coordinates travel in user coordinates (the x-shift of curves given
// by their roots is applied on the way in and out).

Json rat_json(const Rat& q);
Rat rat_from_json(const Json& j);
Json int_json(const Int& n);  // integer when it fits in 64 bits, else string

Json curve_json(const Curve& E);
Curve curve_from_json(const Json& j);

Json point_json(const Curve& E, const CurvePoint& P);
CurvePoint point_from_json(const Curve& E, const Json& j);

Json form_json(const Curve& E, const LinearForm& l);
LinearForm form_from_json(const Curve& E, const Json& j);

Json fn_element_json(const Curve& E, const FnElement& f);
FnElement fn_element_from_json(const Curve& E, const Json& j);

Json quaternion_json(const Curve& E, const QuaternionClass& cls);
QuaternionClass quaternion_from_json(const Curve& E, const Json& j);

Json bundle_json(const BundleSpec& spec);
BundleSpec bundle_from_json(const Json& j, long bound = kDefaultFactorBound);

Json square_class_json(const SquareClass& c);
Json residue_vector_json(const ResidueVector& rv);
Json locus_json(const Curve& E, const SingularLocus& locus);
Json brauer_report_json(const Curve& E, const BrauerReport& rep);
Json survey_json(const Curve& E, const SurveyResult& res);
Json certificate_json(const Curve& E, const ObstructionCertificate& cert);

}  // namespace conicbr

#endif
