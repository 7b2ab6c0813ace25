#include "pieri/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace pieri {

using nlohmann::json;

namespace {

json mult_to_json(const Int& m) {
    if (fits_int64(m))
        return static_cast<std::int64_t>(m);
    return m.str();
}

Int mult_from_json(const json& j) {
    if (j.is_number_integer())
        return Int(j.get<std::int64_t>());
    if (j.is_string())
        return Int(j.get<std::string>());
    throw std::invalid_argument("multiplicity must be an integer or a decimal string");
}

json coords_to_json(const std::vector<int>& doubled) {
    json arr = json::array();
    for (int x : doubled) {
        if (x & 1)
            arr.push_back(x / 2.0);
        else
            arr.push_back(x / 2);
    }
    return arr;
}

std::vector<int> coords_from_json(const json& arr) {
    if (!arr.is_array())
        throw std::invalid_argument("weight must be an array of coordinates");
    std::vector<int> doubled;
    for (const json& c : arr) {
        if (c.is_number_integer()) {
            doubled.push_back(2 * c.get<int>());
        } else if (c.is_number_float()) {
            double x = 2.0 * c.get<double>();
            double r = std::round(x);
            if (x != r)
                throw std::invalid_argument("weight coordinates must be integers or halves");
            doubled.push_back(static_cast<int>(r));
        } else {
            throw std::invalid_argument("weight coordinates must be numbers");
        }
    }
    return doubled;
}

} // namespace

json weight_to_json(const Weight& w) { return coords_to_json(w.doubled()); }

Weight weight_from_json(const json& j) { return Weight(coords_from_json(j)); }

json to_json(const WeightDiagram& d) {
    json entries = json::array();
    const auto& map = d.entries();
    for (auto it = map.rbegin(); it != map.rend(); ++it)
        entries.push_back({{"w", coords_to_json(it->first)}, {"m", mult_to_json(it->second)}});
    return {{"group", d.group().str()}, {"entries", entries}};
}

WeightDiagram weight_diagram_from_json(const json& j) {
    WeightDiagram d(GroupType::parse(j.at("group").get<std::string>()));
    for (const json& e : j.at("entries"))
        d.add(Weight(coords_from_json(e.at("w"))), mult_from_json(e.at("m")));
    return d;
}

json to_json(const Decomposition& d) {
    json terms = json::array();
    const auto& map = d.terms();
    for (auto it = map.rbegin(); it != map.rend(); ++it)
        terms.push_back({{"hw", coords_to_json(it->first)}, {"m", mult_to_json(it->second)}});
    return {{"group", d.group().str()}, {"terms", terms}};
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d(GroupType::parse(j.at("group").get<std::string>()));
    for (const json& e : j.at("terms"))
        d.add(Weight(coords_from_json(e.at("hw"))), mult_from_json(e.at("m")));
    return d;
}

json to_json(const KostantBoundReport& r) {
    json constituents = json::array();
    for (const auto& c : r.constituents)
        constituents.push_back({{"hw", weight_to_json(c.nu)},
                                {"m", mult_to_json(c.mult)},
                                {"weight_mult", mult_to_json(c.weight_mult)},
                                {"in_support", c.in_support},
                                {"within_bound", c.within_bound}});
    json gaps = json::array();
    for (const auto& w : r.converse_gaps)
        gaps.push_back(weight_to_json(w));
    return {{"claim", "kostant-bound"},
            {"group", r.g.str()},
            {"lambda", weight_to_json(r.lambda)},
            {"mu", weight_to_json(r.mu)},
            {"holds", r.holds},
            {"constituents", constituents},
            {"converse_gaps", gaps}};
}

json to_json(const HomEqualityReport& r) {
    json mismatches = json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back({{"nu", m.nu.str()},
                              {"tensor_mult", mult_to_json(m.tensor_mult)},
                              {"hom_count", mult_to_json(m.hom_count)}});
    return {{"claim", "levi-hom-equality"},
            {"group", r.g.str()},
            {"lambda", r.lambda.str()},
            {"ext", r.degree},
            {"checked", r.checked},
            {"mismatches", mismatches},
            {"nonpartition_terms", r.nonpartition_terms},
            {"ok", r.ok()}};
}

namespace {

json violations_to_json(const std::vector<ShiftViolation>& v) {
    json arr = json::array();
    for (const auto& x : v)
        arr.push_back({{"hw", weight_to_json(x.shifted_hw)},
                       {"shifted_mult", mult_to_json(x.shifted_mult)},
                       {"direct_mult", mult_to_json(x.direct_mult)}});
    return arr;
}

} // namespace

json to_json(const ShiftInvarianceReport& r) {
    return {{"claim", "shift-invariance"},
            {"n", r.n},
            {"lambda", r.lambda.str()},
            {"degree", r.degree},
            {"exterior_ok", r.exterior_ok()},
            {"exterior_violations", violations_to_json(r.exterior_violations)},
            {"symmetric_violations", violations_to_json(r.symmetric_violations)}};
}

json to_json(const BranchReport& r) {
    json mismatches = json::array();
    for (const auto& [mu, lam] : r.mismatches)
        mismatches.push_back({{"mu", mu.str()}, {"lambda", lam.str()}});
    return {{"claim", "pieri-branching-equivalence"},
            {"n", r.n},
            {"bound", r.degree_bound},
            {"checked_pairs", r.checked_pairs},
            {"mismatches", mismatches},
            {"ok", r.ok()}};
}

json to_json(const CauchyReport& r) {
    return {{"claim", "cauchy-dimension"},
            {"n", r.n},
            {"m", r.m},
            {"d", r.d},
            {"paired_sum", mult_to_json(r.paired_sum)},
            {"polynomial_dim", mult_to_json(r.polynomial_dim)},
            {"ok", r.ok()}};
}

} // namespace pieri
