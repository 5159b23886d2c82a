#pragma once

#include <string>

#include <json.hpp>

#include "glcq/hwv.hpp"

namespace glcq {

using Json = nlohmann::ordered_json;

inline Json window_to_json(const ExponentWindow& w) {
    return Json{{"m_lo", w.m_lo}, {"m_hi", w.m_hi}, {"n_lo", w.n_lo}, {"n_hi", w.n_hi}};
}

inline Json probe_to_json(const ConstantTermReport& p) {
    Json j;
    j["checks"] = p.checks;
    Json viols = Json::array();
    for (const auto& v : p.violations)
        viols.push_back(Json{{"generator", v.generator}, {"input", v.input}, {"output", v.output}});
    j["violations"] = std::move(viols);
    return j;
}

/// Key order is fixed by construction order (ordered_json), so identical
/// reports serialize byte-identically.
inline Json report_to_json(const IrreducibilityReport& rep) {
    Json j;
    j["params"] = Json{{"l", rep.l}, {"q", rep.q_mode}, {"mu", rep.mu}, {"max_k", rep.max_k},
                       {"degree_cap", rep.degree_cap}};
    j["windows"] =
        Json{{"support", window_to_json(rep.support_window)},
             {"test", window_to_json(rep.test_window)}};
    Json cells = Json::array();
    for (const auto& c : rep.cells) {
        Json cell;
        cell["kvec"] = c.kvec;
        cell["ds"] = c.ds;
        cell["dt"] = c.dt;
        cell["dim_support"] = c.dim_support;
        cell["dim_nullspace"] = c.dim_nullspace;
        cell["basis"] = c.basis;
        cell["certified"] = c.certified;
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    if (rep.probe_ran) j["constant_term_probe"] = probe_to_json(rep.probe);
    j["verdict"] = rep.verdict;
    j["caveats"] = rep.caveats;
    return j;
}

} // namespace glcq
