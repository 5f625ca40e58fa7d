#include "conicbr/json_io.hpp"

#include "conicbr/errors.hpp"

namespace conicbr {

Json rat_json(const Rat& q) { return rat_str(q); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    throw InvalidInput("expected a rational as \"num/den\" string, got: " + j.dump());
}

Json int_json(const Int& n) {
    if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
    return n.get_str();
}

Json curve_json(const Curve& E) {
    Json j;
    j["A"] = rat_json(E.A);
    j["B"] = rat_json(E.B);
    if (E.user_roots) {
        Json roots = Json::array();
        for (const Rat& r : *E.user_roots) roots.push_back(rat_json(r));
        j["roots"] = roots;
        j["x_shift"] = rat_json(E.x_shift);
    }
    return j;
}

Curve curve_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidInput("curve must be an object");
    if (j.contains("roots")) {
        const Json& r = j.at("roots");
        if (!r.is_array() || r.size() != 3)
            throw InvalidInput("curve roots must be an array of three rationals");
        return Curve::from_roots(rat_from_json(r[0]), rat_from_json(r[1]), rat_from_json(r[2]));
    }
    if (j.contains("A") && j.contains("B"))
        return Curve::from_ab(rat_from_json(j.at("A")), rat_from_json(j.at("B")));
    throw InvalidInput("curve needs either {A, B} or {roots}");
}

Json point_json(const Curve& E, const CurvePoint& P) {
    if (P.inf) return "O";
    Json j;
    j["x"] = rat_json(E.to_user_x(P.x));
    j["y"] = rat_json(P.y);
    return j;
}

CurvePoint point_from_json(const Curve& E, const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "O") return CurvePoint::infinity();
        throw InvalidInput("unknown point literal: " + j.dump());
    }
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw InvalidInput("point must be \"O\" or {x, y}");
    CurvePoint P = CurvePoint::affine(E.from_user_x(rat_from_json(j.at("x"))), rat_from_json(j.at("y")));
    require_on_curve(E, P);
    return P;
}

Json form_json(const Curve& E, const LinearForm& l) {
    // X_user = X + x_shift * Z
    Json j;
    j["alpha"] = rat_json(l.alpha);
    j["beta"] = rat_json(l.beta);
    j["gamma"] = rat_json(l.gamma - l.alpha * E.x_shift);
    return j;
}

LinearForm form_from_json(const Curve& E, const Json& j) {
    if (!j.is_object()) throw InvalidInput("linear form must be an object");
    Rat alpha = rat_from_json(j.at("alpha"));
    Rat beta = rat_from_json(j.at("beta"));
    Rat gamma = rat_from_json(j.at("gamma"));
    return LinearForm(alpha, beta, gamma + alpha * E.x_shift);
}

Json fn_element_json(const Curve& E, const FnElement& f) {
    Json arr = Json::array();
    for (const auto& fac : f.factors) {
        Json j;
        Json atom;
        if (const auto* xc = std::get_if<XMinusC>(&fac.atom)) {
            atom["type"] = "x-c";
            atom["c"] = rat_json(E.to_user_x(xc->c));
        } else if (std::get_if<YAtom>(&fac.atom)) {
            atom["type"] = "y";
        } else if (const auto* la = std::get_if<LineAtom>(&fac.atom)) {
            atom["type"] = "line";
            Json lf = form_json(E, la->form);
            for (auto& [k, v] : lf.items()) atom[k] = v;
        } else {
            atom["type"] = "const";
            atom["q"] = rat_json(std::get<ConstAtom>(fac.atom).value);
        }
        j["atom"] = atom;
        j["exp"] = fac.exp;
        arr.push_back(j);
    }
    return arr;
}

FnElement fn_element_from_json(const Curve& E, const Json& j) {
    if (!j.is_array()) throw InvalidInput("function element must be an array of factors");
    FnElement f;
    for (const Json& item : j) {
        if (!item.is_object() || !item.contains("atom") || !item.contains("exp"))
            throw InvalidInput("factor must be {atom, exp}");
        const Json& atom = item.at("atom");
        long exp = item.at("exp").get<long>();
        std::string type = atom.at("type").get<std::string>();
        if (type == "x-c") {
            f.mul(XMinusC{E.from_user_x(rat_from_json(atom.at("c")))}, exp);
        } else if (type == "y") {
            f.mul(YAtom{}, exp);
        } else if (type == "line") {
            f.mul(LineAtom{form_from_json(E, atom)}, exp);
        } else if (type == "const") {
            Rat q = rat_from_json(atom.at("q"));
            if (q == 0) throw InvalidInput("zero constant atom");
            f.mul(ConstAtom{q}, exp);
        } else {
            throw InvalidInput("unknown atom type: " + type);
        }
    }
    return f;
}

Json quaternion_json(const Curve& E, const QuaternionClass& cls) {
    Json j;
    j["a"] = rat_json(cls.a);
    j["f"] = fn_element_json(E, cls.f);
    return j;
}

QuaternionClass quaternion_from_json(const Curve& E, const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("f"))
        throw InvalidInput("quaternion class must be {a, f}");
    return QuaternionClass{rat_from_json(j.at("a")), fn_element_from_json(E, j.at("f"))};
}

Json bundle_json(const BundleSpec& spec) {
    Json j;
    j["curve"] = curve_json(spec.E);
    switch (spec.flavor) {
        case BundleFlavor::Chatelet: {
            j["flavor"] = "chatelet";
            j["a"] = rat_json(spec.a);
            Json pts = Json::array();
            for (const CurvePoint& P : spec.points) pts.push_back(point_json(spec.E, P));
            j["points"] = pts;
            break;
        }
        case BundleFlavor::SumsOfTwoSquares:
            j["flavor"] = "sums-of-two-squares";
            j["a"] = rat_json(spec.a);
            break;
        case BundleFlavor::Custom:
            j["flavor"] = "custom";
            j["a"] = rat_json(spec.a);
            j["coefficient"] = fn_element_json(spec.E, spec.coefficient);
            break;
    }
    return j;
}

BundleSpec bundle_from_json(const Json& j, long bound) {
    if (!j.is_object() || !j.contains("curve") || !j.contains("flavor"))
        throw InvalidInput("bundle must be {curve, flavor, ...}");
    Curve E = curve_from_json(j.at("curve"));
    std::string flavor = j.at("flavor").get<std::string>();
    if (flavor == "sums-of-two-squares") return BundleSpec::sums_of_two_squares(std::move(E));
    if (flavor == "chatelet") {
        if (!j.contains("a") || !j.contains("points"))
            throw InvalidInput("chatelet bundle must be {curve, flavor, a, points}");
        std::vector<CurvePoint> pts;
        for (const Json& p : j.at("points")) pts.push_back(point_from_json(E, p));
        return BundleSpec::chatelet(std::move(E), rat_from_json(j.at("a")), std::move(pts), bound);
    }
    if (flavor == "custom") {
        if (!j.contains("a") || !j.contains("coefficient"))
            throw InvalidInput("custom bundle must be {curve, flavor, a, coefficient}");
        FnElement f = fn_element_from_json(E, j.at("coefficient"));
        return BundleSpec::custom(std::move(E), rat_from_json(j.at("a")), std::move(f), bound);
    }
    throw InvalidInput("unknown bundle flavor: " + flavor);
}

Json square_class_json(const SquareClass& c) { return int_json(c.value); }

Json residue_vector_json(const ResidueVector& rv) {
    Json j;
    j["bits"] = rv.bit_string();
    Json classes = Json::array();
    for (const SquareClass& c : rv.classes) classes.push_back(square_class_json(c));
    j["classes"] = classes;
    return j;
}

Json locus_json(const Curve& E, const SingularLocus& locus) {
    Json j;
    Json pts = Json::array();
    for (const CurvePoint& P : locus.points) pts.push_back(point_json(E, P));
    j["points"] = pts;
    j["size"] = locus.points.size();
    if (locus.n > 0) {
        j["n"] = locus.n;
        j["t"] = locus.t;
    }
    Json stated = Json::array();
    for (const CurvePoint& P : locus.stated_points) stated.push_back(point_json(E, P));
    j["stated_points"] = stated;
    j["stated_matches_engine"] = locus.stated_matches_engine;
    if (locus.warning) j["warning"] = *locus.warning;
    return j;
}

Json brauer_report_json(const Curve& E, const BrauerReport& rep) {
    Json j;
    Json pts = Json::array();
    for (const CurvePoint& P : rep.S) pts.push_back(point_json(E, P));
    j["S"] = pts;

    Json checks;
    checks["S_in_2E"] = rep.checks.s_in_2e;
    Json wits = Json::array();
    for (const auto& [P, Q] : rep.checks.halving_witnesses) {
        Json w;
        w["P"] = point_json(E, P);
        w["Q"] = point_json(E, Q);
        wits.push_back(w);
    }
    checks["halving_witnesses"] = wits;
    checks["F_P_all_equal"] = rep.checks.f_p_all_equal;
    checks["A_ramifies"] = rep.checks.a_ramifies;
    checks["all_pass"] = rep.checks.all_pass();
    if (!rep.checks.failures.empty()) checks["failures"] = rep.checks.failures;
    j["hypothesis_checks"] = checks;

    if (rep.theorem_rank)
        j["theorem_rank"] = *rep.theorem_rank;
    j["upper_bound_rank"] = rep.upper_bound_rank;
    if (rep.p0) j["P0"] = point_json(E, *rep.p0);

    Json gens = Json::array();
    for (const Generator& g : rep.generators) {
        Json gj;
        gj["P"] = point_json(E, g.P);
        if (g.half_witness) gj["Q_P"] = point_json(E, *g.half_witness);
        gj["class"] = quaternion_json(E, g.cls);
        gens.push_back(gj);
    }
    j["generators"] = gens;

    Json matrix;
    Json mpts = Json::array();
    for (const CurvePoint& P : rep.matrix.points) mpts.push_back(point_json(E, P));
    matrix["points"] = mpts;
    Json rows = Json::array();
    for (const auto& row : rep.matrix.rows) {
        Json rj;
        rj["label"] = row.label;
        std::string bits;
        for (uint8_t b : row.bits) bits.push_back(b ? '1' : '0');
        rj["bits"] = bits;
        rows.push_back(rj);
    }
    matrix["rows"] = rows;
    std::string pivot;
    for (uint8_t b : rep.matrix.pivot) pivot.push_back(b ? '1' : '0');
    matrix["residues_of_A"] = pivot;
    Json classes = Json::array();
    for (const SquareClass& c : rep.matrix.residue_classes) classes.push_back(square_class_json(c));
    matrix["residue_classes"] = classes;
    j["residue_matrix"] = matrix;
    return j;
}

Json survey_json(const Curve& E, const SurveyResult& res) {
    Json j;
    Json entries = Json::array();
    for (const SurveyEntry& e : res.entries) {
        Json ej;
        ej["m"] = e.m;
        ej["point"] = point_json(E, e.point);
        switch (e.status) {
            case SurveyEntry::Status::HasPoint: ej["has_point"] = true; break;
            case SurveyEntry::Status::NoPoint: ej["has_point"] = false; break;
            case SurveyEntry::Status::SingularFibre: ej["singular_fibre"] = true; break;
        }
        entries.push_back(ej);
    }
    j["entries"] = entries;
    j["completed"] = res.completed;
    if (res.abort_reason) j["abort_reason"] = *res.abort_reason;
    return j;
}

Json certificate_json(const Curve& E, const ObstructionCertificate& cert) {
    Json j;
    j["B"] = quaternion_json(E, cert.b);
    Json r1, r2;
    r1["x"] = rat_json(E.to_user_x(cert.r1_x));
    r1["branch"] = "+";
    r2["x"] = rat_json(E.to_user_x(cert.r2_x));
    r2["branch"] = "+";
    j["R1"] = r1;
    j["R2"] = r2;
    j["inv"] = Json::array({cert.inv_values[0], cert.inv_values[1]});
    j["f_signs"] = Json::array({cert.f_signs[0], cert.f_signs[1]});
    j["pair"] = Json::array({cert.line_pair.first, cert.line_pair.second});
    j["l_i"] = form_json(E, cert.l_i);
    j["l_j"] = form_json(E, cert.l_j);
    j["Q_i"] = point_json(E, cert.q_i);
    j["Q_j"] = point_json(E, cert.q_j);
    return j;
}

}  // namespace conicbr
