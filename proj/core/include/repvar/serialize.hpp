#pragma once

#include <string>

#include <json.hpp>

#include "repvar/catalog.hpp"
#include "repvar/matnum.hpp"
#include "repvar/profile.hpp"
#include "repvar/torsion.hpp"
#include "repvar/verdict.hpp"
#include "repvar/word.hpp"

namespace repvar {

using json = nlohmann::json;

/// Full-precision hex-float encoding (strtod-compatible, e.g. "0x1.8p+1").
std::string hexf(double x);
double parse_hexf(const std::string& s);

json to_json(const Profile& p);          // {"dim": d, "counts": [N_d..N_0]}
json to_json(const Verdict& v);          // with a "citations" array of {"theorem","quote"}
json to_json(const ExponentProfile& e);
json to_json(const ClassDescriptor& c);
json to_json(const Mat2& m);             // entries as [re, im] hex-float pairs
json to_json(const RepPoint& p);
json to_json(const RankReport& r);
json to_json(const CatalogFact& f);

Profile profile_from_json(const json& j);
Mat2 mat2_from_json(const json& j);
RepPoint rep_point_from_json(const json& j);

} // namespace repvar
