// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#include "abharm/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "abharm/errors.hpp"

namespace abharm::io {

json parse_text(const std::string& text)
{
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        fail(ErrorCode::ParseError, "input is not valid JSON");
    return j;
}

json parse_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::IoError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        fail(ErrorCode::IoError, "cannot read " + path);
    return parse_text(buffer.str());
}

std::vector<std::int64_t> int_list_from_json(const json& j, const char* what)
{
    if (!j.is_array())
        fail(ErrorCode::ParseError, std::string(what) + " must be a JSON array of integers");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_number_integer())
            fail(ErrorCode::ParseError, std::string(what) + " entries must be integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

GroupSpec group_from_json(const json& j, std::size_t size_cap)
{
    if (!j.is_object() || !j.contains("cyclic_orders"))
        fail(ErrorCode::ParseError, "group spec must be an object with a cyclic_orders array");
    return make_group(int_list_from_json(j["cyclic_orders"], "cyclic_orders"), size_cap);
}

namespace {

Complex pair_to_complex(const json& e, const char* what)
{
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        fail(ErrorCode::ParseError, std::string(what) + " must be [re, im] number pairs");
    return {e[0].get<double>(), e[1].get<double>()};
}

} // namespace

std::vector<Complex> values_from_json(const json& j)
{
    if (!j.is_array())
        fail(ErrorCode::ParseError, "values must be a JSON array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const json& e : j)
        out.push_back(pair_to_complex(e, "values"));
    return out;
}

GroupFunction function_from_json(const json& j, const GroupSpec& spec)
{
    if (!j.is_object() || !j.contains("values"))
        fail(ErrorCode::ParseError, "function must be an object with a values array");
    return make_function(spec, values_from_json(j["values"]));
}

SpectrumFunction spectrum_from_json(const json& j, const GroupSpec& spec)
{
    if (!j.is_object() || !j.contains("values"))
        fail(ErrorCode::ParseError, "spectrum must be an object with a values array");
    return make_spectrum(spec, values_from_json(j["values"]));
}

CylinderFunction cylinder_from_json(const json& j, std::size_t size_cap)
{
    if (!j.is_object() || !j.contains("base") || !j.contains("depth") || !j.contains("values"))
        fail(ErrorCode::ParseError, "cylinder must be an object with base, depth, and values");
    if (!j["base"].is_number_integer() || !j["depth"].is_number_integer() ||
        j["depth"].get<std::int64_t>() < 0)
        fail(ErrorCode::ParseError, "base and depth must be integers, depth nonnegative");
    const SequenceGroupSpec spec = make_sequence_group(j["base"].get<std::int64_t>());
    return make_cylinder(spec, j["depth"].get<std::size_t>(), values_from_json(j["values"]),
                         size_cap);
}

std::vector<SupportPoint> support_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("support") || !j["support"].is_array())
        fail(ErrorCode::ParseError, "support must be an object with a support array");
    std::vector<SupportPoint> out;
    for (const json& e : j["support"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer())
            fail(ErrorCode::ParseError, "support entries must be [k, [re, im]] pairs");
        out.push_back(SupportPoint{e[0].get<std::int64_t>(), pair_to_complex(e[1], "support")});
    }
    return out;
}

Complex complex_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() ||
        !j["im"].is_number())
        fail(ErrorCode::ParseError, "complex number must be an object with re and im");
    return {j["re"].get<double>(), j["im"].get<double>()};
}

std::vector<Complex> values_from_csv(const std::string& text)
{
    std::vector<Complex> out;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            fail(ErrorCode::ParseError,
                 "CSV line " + std::to_string(line_no) + " is not re,im");
        try {
            out.emplace_back(std::stod(line.substr(0, comma)),
                             std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError,
                 "CSV line " + std::to_string(line_no) + " is not re,im");
        }
    }
    return out;
}

json values_to_json(std::span<const Complex> values)
{
    json arr = json::array();
    for (const Complex& v : values)
        arr.push_back(complex_to_json(v));
    return arr;
}

json complex_to_json(const Complex& v)
{
    return json::array({v.real(), v.imag()});
}

std::string format_double(double v, int precision)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                                   precision);
    return std::string(buf, res.ptr);
}

namespace {

void dump_rec(const json& j, int precision, std::string& out)
{
    switch (j.type()) {
    case json::value_t::null:
        out += "null";
        break;
    case json::value_t::boolean:
        out += j.get<bool>() ? "true" : "false";
        break;
    case json::value_t::number_integer:
        out += std::to_string(j.get<std::int64_t>());
        break;
    case json::value_t::number_unsigned:
        out += std::to_string(j.get<std::uint64_t>());
        break;
    case json::value_t::number_float:
        out += format_double(j.get<double>(), precision);
        break;
    case json::value_t::string:
        out += json(j.get<std::string>()).dump();
        break;
    case json::value_t::array: {
        out += '[';
        bool first = true;
        for (const json& e : j) {
            if (!first)
                out += ',';
            first = false;
            dump_rec(e, precision, out);
        }
        out += ']';
        break;
    }
    case json::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ',';
            first = false;
            out += json(it.key()).dump();
            out += ':';
            dump_rec(it.value(), precision, out);
        }
        out += '}';
        break;
    }
    default:
        fail(ErrorCode::InvalidArgument, "cannot serialize this JSON value");
    }
}

} // namespace

std::string dump_json(const json& j, int precision)
{
    std::string out;
    dump_rec(j, precision, out);
    return out;
}

} // namespace abharm::io
