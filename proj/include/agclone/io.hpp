#pragma once

// JSON forms for the domain types.  Field order is stable (ordered_json) so
// reports are diffable byte for byte.

#include <json.hpp>

#include "agclone/boolean.hpp"
#include "agclone/clone.hpp"
#include "agclone/core.hpp"
#include "agclone/domains.hpp"
#include "agclone/rules.hpp"
#include "agclone/two_function.hpp"

namespace agclone {

using Json = nlohmann::ordered_json;

inline Json to_json(const ChoiceFunction& c) { return Json{{"m", c.m()}, {"bits", c.bitstring()}}; }

inline ChoiceFunction choice_from_json(const Json& j) {
    return ChoiceFunction::from_bitstring(j.at("m").get<int>(), j.at("bits").get<std::string>());
}

inline Json to_json(const TwoFunction& g) {
    return Json{{"m", g.m()},
                {"arity", g.arity()},
                {"table", std::vector<int>(g.table().begin(), g.table().end())}};
}

inline TwoFunction two_function_from_json(const Json& j) {
    auto vals = j.at("table").get<std::vector<int>>();
    std::vector<std::uint8_t> table(vals.begin(), vals.end());
    return TwoFunction(j.at("m").get<int>(), j.at("arity").get<int>(), std::move(table));
}

inline Json to_json(const BooleanFunction& h) {
    return Json{{"arity", h.arity()}, {"tt", h.tt()}};
}

inline BooleanFunction boolean_from_json(const Json& j) {
    return BooleanFunction(j.at("arity").get<int>(), j.at("tt").get<std::uint64_t>());
}

inline Json to_json(const DecisiveCoalition& K) {
    return Json{{"n", K.n()}, {"members", K.subsets()}};
}

inline DecisiveCoalition coalition_from_json(const Json& j) {
    return DecisiveCoalition::from_subsets(j.at("n").get<int>(),
                                           j.at("members").get<std::vector<std::vector<int>>>());
}

inline Json to_json(const DomainSet& D) {
    std::vector<std::string> members;
    for (const auto& c : D.choice_functions()) members.push_back(c.bitstring());
    return Json{{"m", D.m()}, {"members", members}};
}

inline DomainSet domain_from_json(const Json& j) {
    int m = j.at("m").get<int>();
    std::vector<std::uint32_t> bits;
    for (const auto& s : j.at("members").get<std::vector<std::string>>())
        bits.push_back(ChoiceFunction::from_bitstring(m, s).bits());
    return DomainSet(m, std::move(bits));
}

inline Json to_json(const ExtensionClassification& cls) {
    return Json{{"kind", to_string(cls.kind)}, {"base", to_string(cls.base)}};
}

// Clone-slice export: tables in canonical order plus generator provenance.
inline Json slice_to_json(const std::vector<TwoFunction>& slice,
                          const std::vector<TwoFunction>& generators) {
    Json gens = Json::array();
    for (const auto& g : generators) gens.push_back(to_json(g));
    Json tables = Json::array();
    for (const auto& g : slice) tables.push_back(to_json(g));
    return Json{{"generators", gens}, {"size", slice.size()}, {"members", tables}};
}

}  // namespace agclone
