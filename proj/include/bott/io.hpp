#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "bott/curve.hpp"
#include "bott/divisor.hpp"
#include "bott/errors.hpp"
#include "bott/integers.hpp"
#include "bott/oracle.hpp"
#include "bott/point.hpp"
#include "bott/seshadri.hpp"
#include "bott/tower.hpp"

// JSON adapters for the documented interchange formats. Keys keep insertion
// order (ordered_json) so identical inputs serialize byte-identically.
//
// Tower document: {"n": 4, "bott_numbers": [[c12, c13, c14], [c23, c24], [c34]]}
// Integers wider than 64 bits are emitted as decimal strings; both numbers
// and strings are accepted on input.

namespace bott {

using json = nlohmann::ordered_json;

inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline Int int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError(where + ": not an integer: '" + j.get<std::string>() + "'");
        }
    }
    throw ParseError(where + ": expected an integer or a decimal string");
}

inline json int_vec_to_json(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

inline json tower_to_json(const BottTower& t) {
    json rows = json::array();
    for (const IntVec& row : t.numbers().rows()) rows.push_back(int_vec_to_json(row));
    return json{{"n", t.dimension()}, {"bott_numbers", rows}};
}

inline BottNumbers bott_numbers_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("tower document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("tower document needs an integer field 'n'");
    const int n = doc["n"].get<int>();
    if (n < 1) throw MalformedBottNumbers("tower height must be >= 1");
    if (!doc.contains("bott_numbers") || !doc["bott_numbers"].is_array())
        throw ParseError("tower document needs an array field 'bott_numbers'");
    const json& rows_json = doc["bott_numbers"];
    if (static_cast<int>(rows_json.size()) != n - 1)
        throw MalformedBottNumbers("expected " + std::to_string(n - 1) +
                                   " rows of Bott numbers, got " +
                                   std::to_string(rows_json.size()));
    std::vector<IntVec> rows;
    rows.reserve(rows_json.size());
    for (std::size_t i = 0; i < rows_json.size(); ++i) {
        if (!rows_json[i].is_array())
            throw ParseError("bott_numbers row " + std::to_string(i + 1) + " is not an array");
        IntVec row;
        row.reserve(rows_json[i].size());
        for (const json& entry : rows_json[i])
            row.push_back(int_from_json(entry, "bott_numbers row " + std::to_string(i + 1)));
        rows.push_back(std::move(row));
    }
    return BottNumbers::from_rows(rows);
}

inline json seshadri_result_to_json(const SeshadriResult& r) {
    return json{{"value", int_to_json(r.value)},
                {"witness_index", r.witness_index},
                {"gamma_index", r.gamma_index}};
}

inline json strata_to_json(const std::vector<StratumValue>& strata) {
    json out = json::array();
    for (const StratumValue& s : strata)
        out.push_back(json{{"stratum", s.stratum}, {"value", int_to_json(s.value)}});
    return out;
}

inline json global_extreme_to_json(const GlobalExtreme& g) {
    return json{{"value", int_to_json(g.value)},
                {"stratum", g.stratum},
                {"witness_point", format_point(g.witness)}};
}

inline json wall_to_json(const Wall& w) {
    json rays = json::array();
    for (int r : w.ray_indices()) rays.push_back(r);
    return json{{"position", w.position()},
                {"rays", rays},
                {"adjacent_cones",
                 json::array({w.lower_cone().bits(), w.upper_cone().bits()})}};
}

inline json wall_pairing_to_json(const WallPairing& wp) {
    return json{{"wall", wall_to_json(wp.wall)},
                {"curve_class", int_vec_to_json(wp.curve.p)},
                {"pairing", int_to_json(wp.pairing)}};
}

inline json fixed_point_check_to_json(const FixedPointCheck& c, bool include_walls) {
    json out{{"cone", c.cone.bits()},
             {"point", format_point(c.point)},
             {"oracle", int_to_json(c.oracle_value)},
             {"formula", int_to_json(c.formula_value)},
             {"match", c.match}};
    if (include_walls) {
        json walls = json::array();
        for (const WallPairing& wp : c.walls) walls.push_back(wall_pairing_to_json(wp));
        out["walls"] = walls;
    }
    return out;
}

inline json cross_check_report_to_json(const CrossCheckReport& report) {
    json checks = json::array();
    for (const FixedPointCheck& c : report.checks)
        checks.push_back(fixed_point_check_to_json(c, /*include_walls=*/!c.match));
    return json{{"fixed_points", report.checks.size()},
                {"all_match", report.all_match},
                {"checks", checks}};
}

inline json campaign_report_to_json(const CampaignReport& report) {
    json failures = json::array();
    for (const CampaignFailure& f : report.failures)
        failures.push_back(json{{"trial", f.trial}, {"code", f.code}, {"message", f.message}});
    return json{{"max_dimension", report.options.max_dimension},
                {"trials", report.options.trials},
                {"seed", report.options.seed},
                {"max_bott_number", report.options.max_bott},
                {"max_coefficient", report.options.max_coeff},
                {"instances", report.instances},
                {"fixed_points_checked", report.fixed_points_checked},
                {"walls_checked", report.walls_checked},
                {"discrepancies", failures},
                {"ok", report.ok}};
}

inline json error_to_json(const Error& e) {
    return json{{"error", json{{"code", e.code()}, {"message", e.what()}}}};
}

}  // namespace bott
