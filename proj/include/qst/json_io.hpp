#pragma once

#include <json.hpp>

#include "qst/endo.hpp"
#include "qst/flat_sections.hpp"
#include "qst/series.hpp"

namespace qst {

// Series serialize to an array of terms in the fixed monomial order
// (lexicographic on q, h, t, x), one object per term. Scalars are written
// as strings so the characteristic-0 pipeline round-trips exactly.
template <class K>
nlohmann::json series_to_json(const Series<K>& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : s.terms) {
        arr.push_back({{"q", m.q},
                       {"t", m.t},
                       {"h", m.h},
                       {"x", m.x},
                       {"c", scalar_to_string(c)}});
    }
    return arr;
}

template <class K>
nlohmann::json endo_to_json(const Endo2<K>& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < 2; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 2; ++j) row.push_back(series_to_json(m(i, j)));
        entries.push_back(row);
    }
    return {{"basis", basis_name(m.basis)}, {"entries", entries}};
}

inline nlohmann::json flat_section_to_json(const FlatSection& sec) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& poly : sec.entries) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t d = 0; d < poly.size(); ++d) {
            if (poly[d].v == 0) continue;
            row.push_back({{"q", d}, {"c", poly[d].v}});
        }
        entries.push_back(row);
    }
    return {{"p", sec.p}, {"m", sec.m}, {"basis", "stable"}, {"entries", entries}};
}

} // namespace qst
