#include "symprod/serialization.hpp"

namespace symprod {

namespace {

const Int k53 = Int(1) << 53;

}  // namespace

Json json_int(const Int& v) {
    if (abs(v) < k53) return Json(static_cast<int64_t>(v.get_si()));
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) throw std::domain_error("empty integer literal");
        size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::domain_error("malformed integer literal: " + s);
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::domain_error("malformed integer literal: " + s);
        return Int(s);
    }
    throw std::domain_error("expected an integer (number or decimal string)");
}

Json json_rat(const Rat& q) { return Json(rat_to_string(q)); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<int64_t>())));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::domain_error("expected a rational (\"num/den\" string)");
}

Json to_json(const DivisorClass& c) {
    Json j;
    j["g"] = c.space.g;
    j["n"] = c.space.n;
    j["xi"] = json_int(c.xi);
    j["theta"] = json_int(c.theta);
    return j;
}

DivisorClass divisor_class_from_json(const Json& j) {
    const SymmetricProductSpace space(j.at("g").get<int>(), j.at("n").get<int>());
    return DivisorClass(space, int_from_json(j.at("xi")), int_from_json(j.at("theta")));
}

Json to_json(const ProjectivePoint& p) {
    Json j = Json::array();
    for (const Int& c : p.coords) j.push_back(json_int(c));
    return j;
}

ProjectivePoint point_from_json(const Json& j) {
    if (!j.is_array()) throw std::domain_error("point: expected a coordinate array");
    std::vector<Int> coords;
    for (const auto& entry : j) coords.push_back(int_from_json(entry));
    return ProjectivePoint(std::move(coords));
}

Json to_json(const Divisor3& d) {
    Json pts = Json::array();
    for (const auto& p : d.points) pts.push_back(to_json(p));
    Json j;
    j["points"] = std::move(pts);
    return j;
}

Divisor3 divisor3_from_json(const Json& j) {
    const Json& pts = j.is_array() ? j : j.at("points");
    if (!pts.is_array() || pts.size() != 3)
        throw std::domain_error("divisor: expected exactly 3 points");
    return Divisor3(point_from_json(pts[0]), point_from_json(pts[1]), point_from_json(pts[2]));
}

Json to_json(const HomogeneousForm& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms) terms.push_back(Json::array({e[0], e[1], e[2], json_rat(c)}));
    Json j;
    j["degree"] = f.deg;
    j["terms"] = std::move(terms);
    return j;
}

HomogeneousForm form_from_json(const Json& j) {
    HomogeneousForm f(j.at("degree").get<int>());
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 4)
            throw std::domain_error("form: each term must be [i, j, k, coeff]");
        const Exponents e{term[0].get<int>(), term[1].get<int>(), term[2].get<int>()};
        f.set(e, f.coeff(e) + rat_from_json(term[3]));
    }
    return f;
}

Json to_json(const SearchReport& r) {
    Json j;
    j["g_min"] = r.g_min;
    j["g_max"] = r.g_max;
    j["d_max"] = json_int(r.d_max);
    j["threshold"] = json_int(r.threshold);
    Json cand = Json::array();
    for (const auto& row : r.candidates) {
        Json c;
        c["g"] = row.g;
        c["d"] = json_int(row.d);
        c["value"] = json_int(row.value);
        c["survives"] = row.survives;
        c["excluded_by"] = row.exclusion_reason;
        cand.push_back(std::move(c));
    }
    j["candidates"] = std::move(cand);
    Json surv = Json::array();
    for (const auto& [g, d] : r.surviving) surv.push_back(Json::array({g, json_int(d)}));
    j["surviving"] = std::move(surv);
    if (r.min_degree)
        j["min_degree_conclusion"] = json_int(*r.min_degree);
    else
        j["min_degree_conclusion"] = "> " + r.threshold.get_str();
    return j;
}

Json to_json(const QuinticConstruction& qc) {
    Json j;
    j["seed"] = qc.seed;
    j["attempts"] = qc.attempts;
    j["nullity"] = qc.nullity;
    j["quintic"] = to_json(qc.quintic);
    Json tp = Json::array();
    for (const auto& p : qc.tangency_points) tp.push_back(to_json(p));
    j["tangency_points"] = std::move(tp);
    j["extra_point"] = to_json(qc.extra_point);
    j["pullback_scale"] = json_rat(qc.pullback_scale);
    return j;
}

Json to_json(const NoncollinearityReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["target_degree"] = json_int(r.target_degree);
    j["rank"] = r.rank;
    j["collinear"] = r.collinear;
    j["all_ok"] = r.all_ok;
    j["construction"] = to_json(r.construction);
    Json imgs = Json::array();
    for (const auto& p : r.images) imgs.push_back(to_json(p));
    j["images"] = std::move(imgs);
    Json stages = Json::array();
    for (const auto& s : r.stages) {
        Json st;
        st["name"] = s.name;
        st["ok"] = s.ok;
        st["detail"] = s.detail;
        stages.push_back(std::move(st));
    }
    j["stages"] = std::move(stages);
    return j;
}

}  // namespace symprod
