#pragma once

// JSON shapes shared by the CLI and the verification suite. Every integer is
// rendered as a full decimal string; consumers must never round.

#include "rnkit/auxdioph.hpp"
#include "rnkit/classifier.hpp"

#include <json.hpp>

#include <string>

namespace rnkit {

using json = nlohmann::ordered_json;

inline json to_json(const Tuple& t) {
    json arr = json::array();
    for (const auto& v : t)
        arr.push_back(v.get_str());
    return arr;
}

inline json to_json(const LemmaReport& rep) {
    json j;
    j["lemma"] = rep.lemma;
    j["bounds"] = rep.bounds;
    j["claimed"] = json::array();
    for (const auto& t : rep.claimed)
        j["claimed"].push_back(to_json(t));
    j["found"] = json::array();
    for (const auto& t : rep.found)
        j["found"].push_back(to_json(t));
    j["verdict"] = rep.verdict();
    j["notes"] = rep.notes;
    return j;
}

inline json to_json(const Classification& cls) {
    json j;
    j["instance"] = {{"d1", cls.inst.d1.get_str()}, {"d2", cls.inst.d2.get_str()}};
    j["bounds"] = {{"n_max", cls.n_max}, {"z_bound", cls.z_bound}};
    j["solutions"] = json::array();
    for (const auto& s : cls.solutions)
        j["solutions"].push_back({{"x", s.sol.x.get_str()},
                                  {"m", std::to_string(s.sol.m)},
                                  {"n", std::to_string(s.sol.n)},
                                  {"case", s.case_label},
                                  {"provenance", s.provenance}});
    j["count"] = cls.count;
    j["verdicts"] = {{"theorem_b_exception", cls.theorem_b_exception},
                     {"theorem_a_exception", cls.theorem_a_exception},
                     {"discrepancy", cls.discrepancy}};
    j["provenance"] = cls.provenance;
    if (cls.family.member) {
        j["family"] = {{"lambda", cls.family.lambda},
                       {"z1", cls.family.z1},
                       {"x1", cls.family.x1.get_str()},
                       {"computed_t3_x", cls.family.computed_t3_x.get_str()},
                       {"printed_t3_x", cls.family.printed_t3_x.get_str()},
                       {"printed_formula_matches", cls.family.printed_formula_matches}};
    }
    j["notes"] = cls.notes;
    if (cls.discrepancy)
        j["discrepancy_details"] = cls.discrepancy_details;
    return j;
}

}  // namespace rnkit
