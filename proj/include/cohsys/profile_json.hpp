#pragma once
// Strict JSON schema for evidence profiles.
//
// {
//   "genus": 25,
//   "system": {"r": 2, "d": 39, "n": 5, "generated": true},
//   "lineMaxDegree": 19,                      // optional
//   "sectionCaps": [[1, 19, 2]],              // optional: [rF, dF, maxN]
//   "declared": [[1, 19, 2, true]],           // optional: [r, d, n, generated]
//   "declaredGeneratedFullRank": [...],       // optional: same shape
//   "exclusions": ["no_net",                  // optional
//                  {"rank": 1, "minSections": 3},
//                  {"rank": 1, "minDegree": 11, "minSections": 3}]
// }
//
// Unknown keys are rejected (SchemaError); malformed JSON is a ParseError;
// a declared record that violates a cap or exclusion is a ContradictionError.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cohsys/errors.hpp"
#include "cohsys/profile_engine.hpp"

namespace cohsys {

using OrderedJson = nlohmann::ordered_json;

namespace detail {

inline void require_keys(const OrderedJson& obj, std::initializer_list<const char*> keys,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known) throw SchemaError("unknown key \"" + it.key() + "\" in " + where);
    }
}

inline long long as_int(const OrderedJson& v, const std::string& where) {
    if (!v.is_number_integer()) throw SchemaError(where + " must be an integer");
    return v.get<long long>();
}

inline bool as_bool(const OrderedJson& v, const std::string& where) {
    if (!v.is_boolean()) throw SchemaError(where + " must be a boolean");
    return v.get<bool>();
}

inline SubsystemRecord record_from_json(const OrderedJson& v, const std::string& where) {
    if (!v.is_array() || (v.size() != 3 && v.size() != 4))
        throw SchemaError(where + " entries must be [r, d, n] or [r, d, n, generated]");
    SubsystemRecord rec;
    rec.rank = static_cast<int>(as_int(v[0], where + "[0]"));
    rec.degree = as_int(v[1], where + "[1]");
    rec.sections = static_cast<int>(as_int(v[2], where + "[2]"));
    rec.generated = v.size() == 4 && as_bool(v[3], where + "[3]");
    return rec;
}

inline OrderedJson record_to_json(const SubsystemRecord& rec) {
    return OrderedJson::array({rec.rank, rec.degree, rec.sections, rec.generated});
}

} // namespace detail

inline SystemProfile profile_from_json(const OrderedJson& j) {
    if (!j.is_object()) throw SchemaError("profile must be a JSON object");
    detail::require_keys(j,
                         {"genus", "system", "lineMaxDegree", "sectionCaps", "declared",
                          "declaredGeneratedFullRank", "exclusions"},
                         "profile");
    if (!j.contains("genus") || !j.contains("system"))
        throw SchemaError("profile needs \"genus\" and \"system\"");

    SystemProfile p;
    p.curve = CurveModel{static_cast<int>(detail::as_int(j["genus"], "genus")), true};

    const OrderedJson& sys = j["system"];
    if (!sys.is_object()) throw SchemaError("\"system\" must be an object");
    detail::require_keys(sys, {"r", "d", "n", "generated"}, "system");
    for (const char* k : {"r", "d", "n", "generated"})
        if (!sys.contains(k)) throw SchemaError(std::string("system needs \"") + k + "\"");
    p.sys.rank = static_cast<int>(detail::as_int(sys["r"], "system.r"));
    p.sys.degree = detail::as_int(sys["d"], "system.d");
    p.sys.sections = static_cast<int>(detail::as_int(sys["n"], "system.n"));
    p.sys.generated = detail::as_bool(sys["generated"], "system.generated");

    if (j.contains("lineMaxDegree"))
        p.line_max_degree = detail::as_int(j["lineMaxDegree"], "lineMaxDegree");

    if (j.contains("sectionCaps")) {
        if (!j["sectionCaps"].is_array()) throw SchemaError("\"sectionCaps\" must be an array");
        for (const auto& v : j["sectionCaps"]) {
            if (!v.is_array() || v.size() != 3)
                throw SchemaError("sectionCaps entries must be [rF, dF, maxN]");
            SectionCapOverride o;
            o.rank = static_cast<int>(detail::as_int(v[0], "sectionCaps[0]"));
            o.max_degree = detail::as_int(v[1], "sectionCaps[1]");
            o.max_sections = static_cast<int>(detail::as_int(v[2], "sectionCaps[2]"));
            p.section_caps.push_back(o);
        }
    }
    if (j.contains("declared")) {
        if (!j["declared"].is_array()) throw SchemaError("\"declared\" must be an array");
        for (const auto& v : j["declared"])
            p.declared.push_back(detail::record_from_json(v, "declared"));
    }
    if (j.contains("declaredGeneratedFullRank")) {
        if (!j["declaredGeneratedFullRank"].is_array())
            throw SchemaError("\"declaredGeneratedFullRank\" must be an array");
        for (const auto& v : j["declaredGeneratedFullRank"])
            p.declared_generated_fullrank.push_back(
                detail::record_from_json(v, "declaredGeneratedFullRank"));
    }
    if (j.contains("exclusions")) {
        if (!j["exclusions"].is_array()) throw SchemaError("\"exclusions\" must be an array");
        for (const auto& v : j["exclusions"]) {
            if (v.is_string()) {
                if (v.get<std::string>() != "no_net")
                    throw SchemaError("unknown exclusion name \"" + v.get<std::string>() + "\"");
                p.exclusions.push_back(no_net());
            } else if (v.is_object()) {
                detail::require_keys(v, {"rank", "minDegree", "minSections"}, "exclusion");
                if (!v.contains("rank") || !v.contains("minSections"))
                    throw SchemaError("exclusion needs \"rank\" and \"minSections\"");
                Exclusion x;
                x.rank = static_cast<int>(detail::as_int(v["rank"], "exclusion.rank"));
                x.min_sections =
                    static_cast<int>(detail::as_int(v["minSections"], "exclusion.minSections"));
                if (v.contains("minDegree"))
                    x.min_degree = detail::as_int(v["minDegree"], "exclusion.minDegree");
                p.exclusions.push_back(x);
            } else {
                throw SchemaError("exclusions entries must be \"no_net\" or objects");
            }
        }
    }

    try {
        validate_profile(p);
    } catch (const ContradictionError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(e.what());
    }
    return p;
}

inline OrderedJson profile_to_json(const SystemProfile& p) {
    OrderedJson j;
    j["genus"] = p.curve.genus;
    j["system"] = {{"r", p.sys.rank},
                   {"d", p.sys.degree},
                   {"n", p.sys.sections},
                   {"generated", p.sys.generated}};
    if (p.line_max_degree) j["lineMaxDegree"] = *p.line_max_degree;
    if (!p.section_caps.empty()) {
        j["sectionCaps"] = OrderedJson::array();
        for (const auto& o : p.section_caps)
            j["sectionCaps"].push_back(
                OrderedJson::array({o.rank, o.max_degree, o.max_sections}));
    }
    if (!p.declared.empty()) {
        j["declared"] = OrderedJson::array();
        for (const auto& r : p.declared) j["declared"].push_back(detail::record_to_json(r));
    }
    if (!p.declared_generated_fullrank.empty()) {
        j["declaredGeneratedFullRank"] = OrderedJson::array();
        for (const auto& r : p.declared_generated_fullrank)
            j["declaredGeneratedFullRank"].push_back(detail::record_to_json(r));
    }
    if (!p.exclusions.empty()) {
        j["exclusions"] = OrderedJson::array();
        for (const auto& x : p.exclusions) {
            if (x == no_net()) {
                j["exclusions"].push_back("no_net");
            } else {
                OrderedJson e;
                e["rank"] = x.rank;
                if (x.min_degree) e["minDegree"] = *x.min_degree;
                e["minSections"] = x.min_sections;
                j["exclusions"].push_back(e);
            }
        }
    }
    return j;
}

inline SystemProfile parse_profile_text(const std::string& text) {
    OrderedJson j;
    try {
        j = OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    return profile_from_json(j);
}

inline SystemProfile parse_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open profile file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile_text(buf.str());
}

} // namespace cohsys
