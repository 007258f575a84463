// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "abharm/function.hpp"
#include "abharm/group.hpp"
#include "abharm/profinite.hpp"
#include "abharm/transform.hpp"

namespace abharm::io {

using json = nlohmann::json;

json parse_text(const std::string& text);
json parse_file(const std::string& path);

/// {"cyclic_orders": [2,3,4]}
GroupSpec group_from_json(const json& j, std::size_t size_cap = kDefaultSizeCap);

/// [1,2,0]
std::vector<std::int64_t> int_list_from_json(const json& j, const char* what);

/// [[re,im], ...]
std::vector<Complex> values_from_json(const json& j);

/// {"values": [[re,im], ...]} with length = group order, rank-ordered.
GroupFunction function_from_json(const json& j, const GroupSpec& spec);
SpectrumFunction spectrum_from_json(const json& j, const GroupSpec& spec);

/// {"base": n, "depth": l, "values": [[re,im], ...]} of length n^l.
CylinderFunction cylinder_from_json(const json& j, std::size_t size_cap = kDefaultSizeCap);

/// {"support": [[k, [re,im]], ...]}
std::vector<SupportPoint> support_from_json(const json& j);

/// {"re": ..., "im": ...}
Complex complex_from_json(const json& j);

/// Two-column CSV, one "re,im" row per rank.
std::vector<Complex> values_from_csv(const std::string& text);

json values_to_json(std::span<const Complex> values);
json complex_to_json(const Complex& v);

/// Locale-independent shortest form at `precision` significant digits.
std::string format_double(double v, int precision);

/// Deterministic serialization: keys in sorted order, numbers through
/// format_double. Identical inputs yield byte-identical text.
std::string dump_json(const json& j, int precision);

} // namespace abharm::io
