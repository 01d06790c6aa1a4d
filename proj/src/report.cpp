#include "prs/report.hpp"

#include <sstream>

namespace prs {

namespace {

Json json_point(const ProjPoint& p) {
    Json a = Json::array();
    for (felem c : p.c) a.push_back(c);
    return a;
}

Json json_matrix(const Matrix& M) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < M.rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < M.cols; ++c) row.push_back(M.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_class(const DeepHoleClass& cls, const Field& F) {
    Json j;
    j["syndrome"] = json_point(cls.syndrome);
    Json gp = Json::array();
    Poly gpoly = cls.genpoly.to_poly(F);
    for (felem c : gpoly.coeffs()) gp.push_back(c);
    j["genpoly"] = gp;  // coefficients, low degree first
    j["family"] = family_name(cls.family);
    Json params = Json::object();
    if (cls.index_param) params["i"] = *cls.index_param;
    if (cls.a_param) params["a"] = *cls.a_param;
    if (cls.frac_shift)
        params["a"] = cls.frac_shift->is_infinity ? Json("inf") : Json(cls.frac_shift->value);
    if (cls.quadratic) {
        Json qc = Json::array();
        for (felem c : cls.quadratic->coeffs()) qc.push_back(c);
        params["quadratic"] = qc;
    }
    j["params"] = params;
    j["orbit"] = cls.orbit_label;
    return j;
}

std::string join_ints(const Json& arr, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) os << sep;
        os << arr[i].dump();
    }
    return os.str();
}

}  // namespace

Json report_envelope(const std::string& command, const Field& F) {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["command"] = command;
    j["p"] = F.characteristic();
    j["m"] = F.degree();
    j["q"] = F.order();
    return j;
}

Json field_info_report(const Field& F) {
    Json j = report_envelope("field", F);
    Json mod = Json::array();
    for (felem c : F.modulus()) mod.push_back(c);
    j["modulus"] = mod;
    Json elems = Json::array();
    for (felem e : F.elements()) {
        Json item;
        item["encoding"] = e;
        Json dg = Json::array();
        for (felem d : F.digits(e)) dg.push_back(d);
        item["digits"] = dg;
        elems.push_back(std::move(item));
    }
    j["elements"] = elems;
    j["irreducible_quadratics"] = monic_irreducible_quadratics(F).size();
    return j;
}

Json code_info_report(const PRSCode& code) {
    const Field& F = *code.field;
    Json j = report_envelope("code", F);
    j["k"] = code.k;
    j["length"] = code.length();
    j["generator"] = json_matrix(code.G);
    if (code.H) j["parity_check"] = json_matrix(*code.H);
    j["mds"] = true;      // validated during construction
    j["duality"] = bool(code.H);
    return j;
}

Json covering_radius_report(const Field& F, const PRSCode& code,
                            const CoveringRadiusResult& r) {
    Json j = report_envelope("covering-radius", F);
    j["k"] = code.k;
    j["rho"] = r.rho;
    j["method"] = r.by_special_case ? "special-case" : "enumeration";
    unsigned expected = conjectured_covering_radius(F, code.k);
    j["conjectured_rho"] = expected;
    std::uint64_t q = F.order();
    bool exceptional = (q % 2 == 0) && (code.k == 2 || code.k == q - 2);
    j["conjecture_note"] = exceptional ? "q even, k in {2, q-2} exception" : "generic case";
    j["matches_conjecture"] = (r.rho == expected);
    return j;
}

namespace {

Json classes_array(const std::vector<DeepHoleClass>& classes, const Field& F) {
    Json arr = Json::array();
    for (const DeepHoleClass& cls : classes) arr.push_back(json_class(cls, F));
    return arr;
}

}  // namespace

Json deep_holes_enumerate_report(const Field& F, const PRSCode& code, unsigned rho,
                                 bool rho_by_special_case,
                                 const std::vector<DeepHoleClass>& classes) {
    Json j = report_envelope("deep-holes", F);
    j["mode"] = "enumerate";
    j["k"] = code.k;
    j["rho"] = rho;
    j["rho_method"] = rho_by_special_case ? "special-case" : "enumeration";
    j["count"] = classes.size();
    j["classes"] = classes_array(classes, F);
    return j;
}

Json deep_holes_families_report(const Field& F, const PRSCode& code, unsigned rho,
                                bool conditional_on_conjecture,
                                const std::vector<DeepHoleClass>& classes) {
    Json j = report_envelope("deep-holes", F);
    j["mode"] = "families";
    j["k"] = code.k;
    j["rho"] = rho;
    j["conditional_on_conjecture_1"] = conditional_on_conjecture;
    std::size_t na = 0, nb = 0, nc = 0;
    for (const auto& cls : classes) {
        if (cls.family == Family::A) ++na;
        if (cls.family == Family::B) ++nb;
        if (cls.family == Family::C) ++nc;
    }
    j["count_A"] = na;
    j["count_B"] = nb;
    j["count_C"] = nc;
    j["count"] = classes.size();
    j["classes"] = classes_array(classes, F);
    return j;
}

Json classification_report(const Field& F, const ClassificationReport& rep) {
    Json j = report_envelope("deep-holes", F);
    j["mode"] = rep.orbits ? "orbits" : "classify";
    j["k"] = rep.k;
    j["rho"] = rep.rho;
    j["count_A"] = rep.count_A;
    j["count_B"] = rep.count_B;
    j["count_C"] = rep.count_C;
    j["enumerated"] = rep.enumerated;
    j["expected_total"] = rep.expected_total;
    Json checks;
    checks["families_disjoint"] = rep.families_disjoint;
    checks["count_matches_formula"] = rep.count_matches_formula;
    checks["families_match_enumeration"] = rep.families_match_enumeration;
    j["checks"] = checks;
    if (rep.orbits) {
        Json orb;
        Json sizes = Json::array();
        for (std::size_t s : rep.orbits->ab_orbit_sizes) sizes.push_back(s);
        orb["ab_orbit_sizes"] = sizes;
        orb["c_set_stable"] = rep.orbits->c_set_stable;
        j["orbits"] = orb;
    }
    j["ok"] = rep.ok();
    Json fails = Json::array();
    for (const std::string& f : rep.failures) fails.push_back(f);
    j["failures"] = fails;
    j["classes"] = classes_array(rep.classes, F);
    return j;
}

Json orbit_report(const Field& F, unsigned m, const ProjPoint& point,
                  const OrbitResult& res) {
    Json j = report_envelope("orbits", F);
    j["dim"] = m;
    j["point"] = json_point(point);
    j["orbit_size"] = res.orbit.size();
    j["stabilizer_order"] = res.stabilizer.size();
    j["group_order"] = F.order() * (F.order() * F.order() - 1);
    j["product_check"] =
        res.orbit.size() * res.stabilizer.size() == F.order() * (F.order() * F.order() - 1);
    Json stab = Json::array();
    for (const Mobius& g : res.stabilizer) stab.push_back(Json::array({g.a, g.b, g.c, g.d}));
    j["stabilizer"] = stab;
    Json orb = Json::array();
    for (const ProjPoint& p : res.orbit) orb.push_back(json_point(p));
    j["orbit"] = orb;
    return j;
}

std::string render_text(const Json& j) {
    std::ostringstream os;
    std::string cmd = j.value("command", "");
    os << "command: " << cmd << "   (schema " << j.value("schema", "") << ", version "
       << j.value("version", "") << ")\n";
    os << "field: q = " << j["q"].dump() << " (p = " << j["p"].dump() << ", m = "
       << j["m"].dump() << ")\n";
    if (cmd == "field") {
        os << "modulus coefficients (low first): " << join_ints(j["modulus"], " ") << "\n";
        os << "elements (encoding: digits):\n";
        for (const auto& e : j["elements"])
            os << "  " << e["encoding"].dump() << ": " << join_ints(e["digits"], " ") << "\n";
        os << "monic irreducible quadratics: " << j["irreducible_quadratics"].dump() << "\n";
    } else if (cmd == "code") {
        os << "k = " << j["k"].dump() << ", length = " << j["length"].dump() << "\n";
        os << "generator matrix:\n";
        for (const auto& row : j["generator"]) os << "  " << join_ints(row, " ") << "\n";
        if (j.contains("parity_check")) {
            os << "parity check matrix:\n";
            for (const auto& row : j["parity_check"]) os << "  " << join_ints(row, " ") << "\n";
        }
        os << "mds: yes\n";
    } else if (cmd == "covering-radius") {
        os << "k = " << j["k"].dump() << "\n";
        os << "rho = " << j["rho"].dump() << " (" << j["method"].get<std::string>() << ")\n";
        os << "conjectured rho = " << j["conjectured_rho"].dump() << " ["
           << j["conjecture_note"].get<std::string>() << "], agreement: "
           << (j["matches_conjecture"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "deep-holes") {
        os << "mode = " << j["mode"].get<std::string>() << ", k = " << j["k"].dump()
           << ", rho = " << j["rho"].dump() << "\n";
        if (j.contains("count_A"))
            os << "family sizes: A = " << j["count_A"].dump() << ", B = " << j["count_B"].dump()
               << ", C = " << j["count_C"].dump() << "\n";
        if (j.contains("count")) os << "classes: " << j["count"].dump() << "\n";
        if (j.contains("enumerated"))
            os << "classes: " << j["enumerated"].dump() << " (expected "
               << j["expected_total"].dump() << ")\n";
        if (j.contains("checks")) {
            for (auto it = j["checks"].begin(); it != j["checks"].end(); ++it)
                os << "check " << it.key() << ": " << (it.value().get<bool>() ? "pass" : "FAIL")
                   << "\n";
        }
        if (j.contains("orbits")) {
            os << "A u B orbit sizes: " << join_ints(j["orbits"]["ab_orbit_sizes"], " ") << "\n";
            os << "C set PGL2-stable: "
               << (j["orbits"]["c_set_stable"].get<bool>() ? "yes" : "no") << "\n";
        }
        os << "family params syndrome genpoly orbit\n";
        for (const auto& c : j["classes"]) {
            os << c["family"].get<std::string>() << " ";
            const auto& params = c["params"];
            if (params.empty()) os << "-";
            bool first = true;
            for (auto it = params.begin(); it != params.end(); ++it) {
                os << (first ? "" : ",") << it.key() << "="
                   << (it.value().is_array() ? join_ints(it.value(), "|") : it.value().dump());
                first = false;
            }
            os << " (" << join_ints(c["syndrome"], ":") << ") [" << join_ints(c["genpoly"], " ")
               << "] " << c["orbit"].get<std::string>() << "\n";
        }
    } else if (cmd == "orbits") {
        os << "m = " << j["dim"].dump() << ", point (" << join_ints(j["point"], ":") << ")\n";
        os << "orbit size = " << j["orbit_size"].dump() << ", stabilizer order = "
           << j["stabilizer_order"].dump() << ", group order = " << j["group_order"].dump()
           << ", product check: " << (j["product_check"].get<bool>() ? "pass" : "FAIL") << "\n";
        os << "stabilizer elements (a b c d):\n";
        for (const auto& g : j["stabilizer"]) os << "  " << join_ints(g, " ") << "\n";
    }
    return os.str();
}

std::string render_csv(const Json& j) {
    if (!j.contains("classes")) throw std::invalid_argument("report has no class table");
    std::ostringstream os;
    os << "family,params,syndrome,genpoly,orbit\n";
    for (const auto& c : j["classes"]) {
        os << c["family"].get<std::string>() << ",";
        const auto& params = c["params"];
        bool first = true;
        for (auto it = params.begin(); it != params.end(); ++it) {
            os << (first ? "" : " ") << it.key() << "="
               << (it.value().is_array() ? join_ints(it.value(), "|") : it.value().dump());
            first = false;
        }
        os << "," << join_ints(c["syndrome"], ":") << "," << join_ints(c["genpoly"], " ") << ","
           << c["orbit"].get<std::string>() << "\n";
    }
    return os.str();
}

std::string render(const Json& report, ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::Jsonish: return report.dump(2) + "\n";
        case ReportFormat::Csv: return render_csv(report);
        default: return render_text(report);
    }
}

}  // namespace prs
