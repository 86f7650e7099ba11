#include "repvar/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace repvar {

std::string hexf(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

double parse_hexf(const std::string& s) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw std::invalid_argument("parse_hexf: malformed float '" + s + "'");
    return v;
}

json to_json(const Profile& p) {
    json j;
    j["dim"] = p.dim();
    j["counts"] = p.empty() ? std::vector<long long>{0} : p.counts();
    if (p.empty())
        j["empty"] = true;
    return j;
}

Profile profile_from_json(const json& j) {
    if (j.value("empty", false))
        return Profile::empty_variety();
    return Profile::from_counts(j.at("dim").get<int>(), j.at("counts").get<std::vector<long long>>());
}

json to_json(const Verdict& v) {
    json cites = json::array();
    for (const Citation& c : v.citations)
        cites.push_back({{"theorem", c.rule}, {"quote", c.statement}});
    return {{"kind", to_string(v.kind)}, {"statement", v.statement}, {"citations", cites}};
}

json to_json(const ExponentProfile& e) {
    return {{"sums", e.sums}, {"total", e.total}};
}

json to_json(const ClassDescriptor& c) {
    json j;
    j["group"] = to_string(c.group);
    j["n"] = c.modulus;
    j["kind"] = c.kind == ClassKind::CentralPoint ? "central" : "class";
    j["dim"] = c.dim;
    if (c.eigen_exponent)
        j["exponent"] = *c.eigen_exponent;
    if (c.central_value)
        j["central_value"] = to_string(*c.central_value);
    return j;
}

namespace {

json complex_to_json(const cplx& z) {
    return json::array({hexf(z.real()), hexf(z.imag())});
}

cplx complex_from_json(const json& j) {
    return {parse_hexf(j.at(0).get<std::string>()), parse_hexf(j.at(1).get<std::string>())};
}

} // namespace

json to_json(const Mat2& m) {
    return json::array({complex_to_json(m.a), complex_to_json(m.b), complex_to_json(m.c),
                        complex_to_json(m.d)});
}

Mat2 mat2_from_json(const json& j) {
    return {complex_from_json(j.at(0)), complex_from_json(j.at(1)), complex_from_json(j.at(2)),
            complex_from_json(j.at(3))};
}

json to_json(const RepPoint& p) {
    json arr = json::array();
    for (const Mat2& m : p.matrices)
        arr.push_back(to_json(m));
    return arr;
}

RepPoint rep_point_from_json(const json& j) {
    RepPoint p;
    for (const json& m : j)
        p.matrices.push_back(mat2_from_json(m));
    return p;
}

json to_json(const RankReport& r) {
    json sv = json::array();
    for (double s : r.singular_values)
        sv.push_back(hexf(s));
    return {{"singular_values", sv},
            {"rank", r.rank},
            {"fiber_dim_estimate", r.fiber_dim_estimate},
            {"residual", hexf(r.residual)},
            {"fd_step", hexf(r.fd_step)},
            {"rank_rtol", hexf(r.rank_rtol)},
            {"degenerate", r.degenerate}};
}

json to_json(const CatalogFact& f) {
    json j;
    j["subject"] = to_string(f.subject);
    j["property"] = to_string(f.property);
    if (f.value)
        j["value"] = *f.value;
    j["source"] = f.source;
    j["note"] = f.note;
    return j;
}

} // namespace repvar
