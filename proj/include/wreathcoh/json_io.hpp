#pragma once

#include <json.hpp>

#include "arith.hpp"
#include "formulas.hpp"
#include "spectral.hpp"

namespace wreathcoh {

using nlohmann::json;

/* big integers render as numbers while they fit, decimal strings after */
inline json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_string())
        return Int(j.get<std::string>());
    require(j.is_number_integer(), "json: expected an integer or decimal string");
    return Int(j.get<long long>());
}

inline json json_factors(const std::vector<Int>& factors) {
    json arr = json::array();
    for (const auto& f : factors)
        arr.push_back(json_int(f));
    return arr;
}

inline json json_of(const Graded& h) {
    json fams = json::array();
    for (const auto& f : h.canonical().families) {
        json jf{{"first_degree", f.first_degree},
                {"period", f.period},
                {"order", json_int(f.order)},
                {"multiplicity", f.multiplicity}};
        if (f.count == kInfinite)
            jf["count"] = "inf";
        else
            jf["count"] = f.count;
        if (!f.provenance.empty())
            jf["provenance"] = f.provenance;
        fams.push_back(std::move(jf));
    }
    return json{{"families", std::move(fams)}};
}

inline Graded graded_from_json(const json& j) {
    require(j.is_object() && j.contains("families") && j.at("families").is_array(),
            "json: a graded group is {\"families\": [...]}");
    Graded out;
    for (const auto& jf : j.at("families")) {
        Family f;
        f.first_degree = jf.at("first_degree").get<int>();
        f.period = jf.value("period", 1);
        const json& cnt = jf.contains("count") ? jf.at("count") : json(1);
        if (cnt.is_string()) {
            require(cnt.get<std::string>() == "inf", "json: count is an integer or \"inf\"");
            f.count = kInfinite;
        } else {
            f.count = cnt.get<long long>();
            require(f.count >= 1, "json: a finite family needs count >= 1");
        }
        f.order = int_from_json(jf.at("order"));
        require(f.order >= 0, "json: order is 0 (infinite cyclic) or positive");
        f.multiplicity = jf.value("multiplicity", 1LL);
        require(f.multiplicity >= 1, "json: multiplicity must be positive");
        f.provenance = jf.value("provenance", std::string());
        require(f.period >= 1, "json: period must be positive");
        out.families.push_back(std::move(f));
    }
    return out;
}

inline json json_of(const Mat& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(json_int(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json json_of(const Page& pg) {
    json entries = json::array();
    for (const auto& e : pg.entries) {
        json je{{"i", e.i}, {"j", e.j}, {"factors", json_factors(e.factors)}};
        if (e.has_d)
            je["d_r"] = json{{"target", json::array({e.ti, e.tj})}, {"matrix", json_of(e.d)}};
        entries.push_back(std::move(je));
    }
    return json{{"r", pg.r},
                {"kind", kind_name(pg.kind)},
                {"total_degrees", json::array({pg.m_lo, pg.m_hi})},
                {"certified_through_total_degree", pg.cert_total_hi},
                {"entries", std::move(entries)}};
}

inline json json_of(const PageTable& t) {
    json pats = json::array();
    for (const auto& p : t.patterns)
        pats.push_back(json{{"i", p.i_expr}, {"j", p.j_expr}, {"group", json_factors(p.group)}});
    return json{{"name", t.name}, {"patterns", std::move(pats)}};
}

inline json json_of(const ExponentPair& e) {
    json out{{"e", json_int(e.e)}, {"ee", json_int(e.ee)}};
    if (e.ambiguous) {
        out["e_upper"] = json_int(e.e_upper);
        out["ambiguous"] = true;
    }
    return out;
}

inline json json_of(const TowerReport& t) {
    json dims = json::array();
    for (const auto& d : t.dims)
        dims.push_back(json_int(d));
    return json{{"p", t.p},
                {"steps", t.steps},
                {"exponents", json_of(t.exps)},
                {"variety_dims", std::move(dims)},
                {"nu_p_che", json_int(t.nu_che)},
                {"nu_p_order", json_int(t.nu_order)}};
}

inline json json_of(const ScaledCheckReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back(json{{"i", e.i},
                               {"j", e.j},
                               {"classes", e.classes},
                               {"zigzag_ok", e.zigzag_ok},
                               {"vector_scaled_ok", e.vector_scaled_ok},
                               {"unit_d", json_of(e.base_d)},
                               {"scaled_d", json_of(e.scaled_d)}});
    return json{{"p", rep.p},
                {"d", rep.d},
                {"n", json_int(rep.n)},
                {"r", rep.r},
                {"all_ok", rep.all_ok},
                {"entries", std::move(entries)}};
}

inline json json_of(const std::vector<TableMismatch>& ms) {
    json arr = json::array();
    for (const auto& m : ms)
        arr.push_back(json{{"i", m.i},
                           {"j", m.j},
                           {"expected", json_factors(m.expected)},
                           {"got", json_factors(m.got)}});
    return arr;
}

}  // namespace wreathcoh
