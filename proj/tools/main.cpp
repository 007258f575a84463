// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "abharm/dual.hpp"
#include "abharm/errors.hpp"
#include "abharm/haar.hpp"
#include "abharm/json_io.hpp"
#include "abharm/profinite.hpp"
#include "abharm/transform.hpp"

namespace {

constexpr const char* kVersion = "abharm 1.0.0";

using abharm::Complex;
using abharm::Error;
using abharm::ErrorCode;
using json = abharm::io::json;

/// Error annotated with the input file it was raised for.
class PathedError : public Error {
  public:
    PathedError(const Error& e, std::string path)
        : Error(e.code(), e.what()), path_(std::move(path))
    {
    }

    const std::string& path() const noexcept { return path_; }

  private:
    std::string path_;
};

template <typename F>
auto with_path(const std::string& path, F&& fn)
{
    try {
        return fn();
    } catch (const PathedError&) {
        throw;
    } catch (const Error& e) {
        throw PathedError(e, path);
    }
}

std::size_t size_cap_from_env()
{
    const char* raw = std::getenv("ABHARM_SIZE_CAP");
    if (raw == nullptr)
        return abharm::kDefaultSizeCap;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed == 0)
        abharm::fail(ErrorCode::InvalidArgument,
                     "ABHARM_SIZE_CAP must be a positive integer");
    return static_cast<std::size_t>(parsed);
}

// [0, 1) from the standard-specified mt19937_64 stream, independent of any
// library distribution so reruns are reproducible byte for byte.
double runif(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Options {
    std::string group_path;
    std::string input_path;
    std::string input2_path;
    std::string out_path;
    std::string by_text;
    std::string support_path;
    std::string base_text;
    std::string haar_mode = "normalized";
    int precision = 12;
    std::uint64_t seed = 0;
    std::size_t shifts = 32;
    std::int64_t cantor_base = 0;
    std::int64_t cantor_depth = -1;
    std::size_t refine_to = 0;
    bool naive = false;
    bool csv = false;
    std::size_t size_cap = abharm::kDefaultSizeCap;
};

abharm::GroupSpec load_group(const Options& opt)
{
    return with_path(opt.group_path, [&] {
        return abharm::io::group_from_json(abharm::io::parse_file(opt.group_path),
                                           opt.size_cap);
    });
}

std::vector<Complex> load_values(const std::string& path, bool csv)
{
    return with_path(path, [&]() -> std::vector<Complex> {
        if (csv) {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                abharm::fail(ErrorCode::IoError, "cannot open " + path);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            return abharm::io::values_from_csv(text);
        }
        const json j = abharm::io::parse_file(path);
        if (!j.is_object() || !j.contains("values"))
            abharm::fail(ErrorCode::ParseError, "expected an object with a values array");
        return abharm::io::values_from_json(j["values"]);
    });
}

abharm::GroupFunction load_function(const Options& opt, const abharm::GroupSpec& spec,
                                    const std::string& path)
{
    return with_path(path,
                     [&] { return abharm::make_function(spec, load_values(path, opt.csv)); });
}

abharm::HaarWeight haar_for(const Options& opt, const abharm::GroupSpec& spec)
{
    if (opt.haar_mode == "counting")
        return abharm::counting_haar(spec);
    return abharm::normalized_haar(spec);
}

Complex parse_base(const std::string& text)
{
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        abharm::fail(ErrorCode::ParseError, "--base expects \"re,im\"");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        abharm::fail(ErrorCode::ParseError, "--base expects \"re,im\"");
    }
}

json run_transform(const Options& opt, bool inverse)
{
    const abharm::GroupSpec spec = load_group(opt);
    const abharm::HaarWeight w = haar_for(opt, spec);
    std::vector<Complex> out;
    if (inverse) {
        const auto F = with_path(opt.input_path, [&] {
            return abharm::make_spectrum(spec, load_values(opt.input_path, opt.csv));
        });
        out = (opt.naive ? abharm::inverse_fourier_naive(w, F) : abharm::inverse_fourier(w, F))
                  .values;
    } else {
        const auto f = load_function(opt, spec, opt.input_path);
        out = (opt.naive ? abharm::fourier_naive(w, f) : abharm::fourier_fast(w, f)).values;
    }
    return json{{"values", abharm::io::values_to_json(out)}};
}

json run_convolve(const Options& opt)
{
    const abharm::GroupSpec spec = load_group(opt);
    const abharm::HaarWeight w = haar_for(opt, spec);
    const auto f = load_function(opt, spec, opt.input_path);
    const auto g = load_function(opt, spec, opt.input2_path);
    const auto h = opt.naive ? abharm::convolve_direct(w, f, g) : abharm::convolve(w, f, g);
    return json{{"values", abharm::io::values_to_json(h.values)}};
}

json run_translate(const Options& opt)
{
    const abharm::GroupSpec spec = load_group(opt);
    const auto f = load_function(opt, spec, opt.input_path);
    const auto by = abharm::io::int_list_from_json(abharm::io::parse_text(opt.by_text), "--by");
    const auto shifted = abharm::translate(f, abharm::element(spec, by));
    return json{{"values", abharm::io::values_to_json(shifted.values)}};
}

json run_laplace(const Options& opt)
{
    const auto support = with_path(opt.support_path, [&] {
        return abharm::io::support_from_json(abharm::io::parse_file(opt.support_path));
    });
    const auto phi = abharm::make_laurent_character(parse_base(opt.base_text));
    const Complex value = abharm::fourier_laplace_integers(support, phi);
    const char* bounded =
        abharm::classify_character(phi) == abharm::Boundedness::Bounded ? "bounded"
                                                                        : "unbounded";
    return json{{"value", abharm::io::complex_to_json(value)}, {"character", bounded}};
}

json run_characters(const Options& opt)
{
    const abharm::GroupSpec spec = load_group(opt);
    const auto characters = abharm::dual_group(spec);
    json list = json::array();
    for (const auto& chi : characters)
        list.push_back(json{{"frequencies", chi.frequencies}});
    return json{{"count", characters.size()}, {"characters", list}};
}

json run_haar_check(const Options& opt)
{
    const abharm::GroupSpec spec = load_group(opt);
    const abharm::HaarWeight w = haar_for(opt, spec);
    const auto f = load_function(opt, spec, opt.input_path);

    std::mt19937_64 rng(opt.seed);
    double invariance_max = 0.0;
    for (std::size_t i = 0; i < opt.shifts; ++i) {
        const std::size_t k = static_cast<std::size_t>(runif(rng) * static_cast<double>(spec.order));
        const auto a = abharm::unrank(spec, std::min(k, spec.order - 1));
        invariance_max = std::max(invariance_max, abharm::check_invariance(w, f, a));
    }

    // Positivity axiom probed on |f|: nonnegative always, positive iff f is
    // not identically zero.
    std::vector<Complex> abs_values(f.values.size());
    bool nonzero = false;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        abs_values[i] = Complex{std::abs(f.values[i]), 0.0};
        nonzero = nonzero || abs_values[i].real() > 0.0;
    }
    const Complex mass = abharm::integrate(w, abharm::make_function(spec, abs_values));
    const bool positivity_ok =
        mass.imag() == 0.0 && mass.real() >= 0.0 && (!nonzero || mass.real() > 0.0);

    double linearity_max = 0.0;
    for (std::size_t i = 0; i < opt.shifts; ++i) {
        std::vector<Complex> g_values(spec.order);
        for (auto& v : g_values)
            v = Complex{2.0 * runif(rng) - 1.0, 2.0 * runif(rng) - 1.0};
        const auto g = abharm::make_function(spec, g_values);
        const Complex alpha{2.0 * runif(rng) - 1.0, 2.0 * runif(rng) - 1.0};
        const Complex beta{2.0 * runif(rng) - 1.0, 2.0 * runif(rng) - 1.0};
        std::vector<Complex> combo(spec.order);
        for (std::size_t x = 0; x < spec.order; ++x)
            combo[x] = alpha * f.values[x] + beta * g.values[x];
        const Complex lhs = abharm::integrate(w, abharm::make_function(spec, combo));
        const Complex rhs = alpha * abharm::integrate(w, f) + beta * abharm::integrate(w, g);
        linearity_max = std::max(linearity_max, std::abs(lhs - rhs));
    }

    return json{{"invariance_max_residual", invariance_max},
                {"positivity_ok", positivity_ok},
                {"linearity_max_residual", linearity_max}};
}

json run_haar_unique(const Options& opt)
{
    const abharm::GroupSpec spec = load_group(opt);
    return json{{"dimension", abharm::uniqueness_oracle(spec)}};
}

abharm::CylinderFunction load_cylinder(const Options& opt)
{
    auto cf = with_path(opt.input_path, [&] {
        return abharm::io::cylinder_from_json(abharm::io::parse_file(opt.input_path),
                                              opt.size_cap);
    });
    if (opt.cantor_base != 0 && opt.cantor_base != cf.spec.base)
        abharm::fail(ErrorCode::ShapeMismatch, "--base disagrees with the cylinder file");
    if (opt.cantor_depth >= 0 && static_cast<std::size_t>(opt.cantor_depth) != cf.depth)
        abharm::fail(ErrorCode::ShapeMismatch, "--depth disagrees with the cylinder file");
    return cf;
}

json cylinder_to_json(const abharm::CylinderFunction& cf)
{
    return json{{"base", cf.spec.base},
                {"depth", cf.depth},
                {"values", abharm::io::values_to_json(cf.table.values)}};
}

json run_cantor_transform(const Options& opt)
{
    const auto cf = load_cylinder(opt);
    const auto spectrum = abharm::transform_cylinder(cf);
    return json{{"base", cf.spec.base},
                {"depth", cf.depth},
                {"values", abharm::io::values_to_json(spectrum.values)}};
}

json run_cantor_integrate(const Options& opt)
{
    const auto cf = load_cylinder(opt);
    return json{{"value", abharm::io::complex_to_json(abharm::haar_integrate_cylinder(cf))}};
}

json run_cantor_refine(const Options& opt)
{
    const auto cf = load_cylinder(opt);
    return cylinder_to_json(abharm::refine(cf, opt.refine_to, opt.size_cap));
}

int emit(const Options& opt, const json& report)
{
    const std::string text = abharm::io::dump_json(report, opt.precision) + "\n";
    if (opt.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "{\"code\":\"IoError\",\"message\":\"cannot open output\",\"path\":"
                  << json(opt.out_path).dump() << "}\n";
        return 2;
    }
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "{\"code\":\"IoError\",\"message\":\"cannot write output\",\"path\":"
                  << json(opt.out_path).dump() << "}\n";
        return 2;
    }
    return 0;
}

void add_common(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--out", opt.out_path, "Output file (default: standard output)");
    cmd->add_option("--precision", opt.precision, "Significant digits, 6..17 (default 12)")
        ->check(CLI::Range(6, 17));
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"Harmonic analysis on finite and profinite abelian groups"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::function<json()> action;

    auto* transform = app.add_subcommand("transform", "Fourier transform of a function");
    transform->add_option("--group", opt.group_path, "Group spec JSON")->required();
    transform->add_option("--in", opt.input_path, "Function JSON")->required();
    transform->add_option("--haar", opt.haar_mode, "normalized|counting")
        ->check(CLI::IsMember({"normalized", "counting"}));
    transform->add_flag("--naive", opt.naive, "Use the O(N^2) reference path");
    transform->add_flag("--csv", opt.csv, "Inputs are two-column re,im CSV");
    add_common(transform, opt);
    transform->callback([&] { action = [&] { return run_transform(opt, false); }; });

    auto* itransform = app.add_subcommand("itransform", "Inverse Fourier transform");
    itransform->add_option("--group", opt.group_path, "Group spec JSON")->required();
    itransform->add_option("--in", opt.input_path, "Spectrum JSON")->required();
    itransform->add_option("--haar", opt.haar_mode, "normalized|counting")
        ->check(CLI::IsMember({"normalized", "counting"}));
    itransform->add_flag("--naive", opt.naive, "Use the O(N^2) reference path");
    itransform->add_flag("--csv", opt.csv, "Inputs are two-column re,im CSV");
    add_common(itransform, opt);
    itransform->callback([&] { action = [&] { return run_transform(opt, true); }; });

    auto* convolve = app.add_subcommand("convolve", "Convolution of two functions");
    convolve->add_option("--group", opt.group_path, "Group spec JSON")->required();
    convolve->add_option("--in", opt.input_path, "First function JSON")->required();
    convolve->add_option("--in2", opt.input2_path, "Second function JSON")->required();
    convolve->add_option("--haar", opt.haar_mode, "normalized|counting")
        ->check(CLI::IsMember({"normalized", "counting"}));
    convolve->add_flag("--naive", opt.naive, "Force the direct O(N^2) path");
    convolve->add_flag("--csv", opt.csv, "Inputs are two-column re,im CSV");
    add_common(convolve, opt);
    convolve->callback([&] { action = [&] { return run_convolve(opt); }; });

    auto* translate = app.add_subcommand("translate", "Shift a function by a group element");
    translate->add_option("--group", opt.group_path, "Group spec JSON")->required();
    translate->add_option("--in", opt.input_path, "Function JSON")->required();
    translate->add_option("--by", opt.by_text, "Shift, e.g. \"[1,0]\"")->required();
    translate->add_flag("--csv", opt.csv, "Inputs are two-column re,im CSV");
    add_common(translate, opt);
    translate->callback([&] { action = [&] { return run_translate(opt); }; });

    auto* laplace = app.add_subcommand("laplace",
                                       "Fourier-Laplace transform on the integers");
    laplace->add_option("--support", opt.support_path, "Support JSON")->required();
    laplace->add_option("--base", opt.base_text, "Character base \"re,im\"")->required();
    add_common(laplace, opt);
    laplace->callback([&] { action = [&] { return run_laplace(opt); }; });

    auto* characters = app.add_subcommand("characters", "Enumerate the dual group");
    characters->add_option("--group", opt.group_path, "Group spec JSON")->required();
    add_common(characters, opt);
    characters->callback([&] { action = [&] { return run_characters(opt); }; });

    auto* haar_check = app.add_subcommand("haar-check", "Invariance / positivity / linearity report");
    haar_check->add_option("--group", opt.group_path, "Group spec JSON")->required();
    haar_check->add_option("--function", opt.input_path, "Function JSON")->required();
    haar_check->add_option("--shifts", opt.shifts, "Number of probes (default 32)");
    haar_check->add_option("--seed", opt.seed, "Probe RNG seed (default 0)");
    haar_check->add_option("--haar", opt.haar_mode, "normalized|counting")
        ->check(CLI::IsMember({"normalized", "counting"}));
    haar_check->add_flag("--csv", opt.csv, "Inputs are two-column re,im CSV");
    add_common(haar_check, opt);
    haar_check->callback([&] { action = [&] { return run_haar_check(opt); }; });

    auto* haar_unique = app.add_subcommand("haar-unique",
                                           "Dimension of the invariant-integral space");
    haar_unique->add_option("--group", opt.group_path, "Group spec JSON")->required();
    add_common(haar_unique, opt);
    haar_unique->callback([&] { action = [&] { return run_haar_unique(opt); }; });

    auto* cantor_transform = app.add_subcommand("cantor-transform",
                                                "Transform a cylinder function");
    cantor_transform->add_option("--in", opt.input_path, "Cylinder JSON")->required();
    cantor_transform->add_option("--base", opt.cantor_base, "Base consistency check");
    cantor_transform->add_option("--depth", opt.cantor_depth, "Depth consistency check");
    add_common(cantor_transform, opt);
    cantor_transform->callback([&] { action = [&] { return run_cantor_transform(opt); }; });

    auto* cantor_integrate = app.add_subcommand("cantor-integrate",
                                                "Integrate a cylinder function");
    cantor_integrate->add_option("--in", opt.input_path, "Cylinder JSON")->required();
    cantor_integrate->add_option("--base", opt.cantor_base, "Base consistency check");
    cantor_integrate->add_option("--depth", opt.cantor_depth, "Depth consistency check");
    add_common(cantor_integrate, opt);
    cantor_integrate->callback([&] { action = [&] { return run_cantor_integrate(opt); }; });

    auto* cantor_refine = app.add_subcommand("cantor-refine",
                                             "Lift a cylinder function to a deeper truncation");
    cantor_refine->add_option("--in", opt.input_path, "Cylinder JSON")->required();
    cantor_refine->add_option("--to", opt.refine_to, "Target depth")->required();
    cantor_refine->add_option("--base", opt.cantor_base, "Base consistency check");
    cantor_refine->add_option("--depth", opt.cantor_depth, "Depth consistency check");
    add_common(cantor_refine, opt);
    cantor_refine->callback([&] { action = [&] { return run_cantor_refine(opt); }; });

    CLI11_PARSE(app, argc, argv);

    try {
        opt.size_cap = size_cap_from_env();
        const json report = action();
        return emit(opt, report);
    } catch (const PathedError& e) {
        const json err{{"code", abharm::error_code_name(e.code())},
                       {"message", e.what()},
                       {"path", e.path()}};
        std::cerr << abharm::io::dump_json(err, opt.precision) << "\n";
        return e.code() == ErrorCode::IoError ? 2 : 1;
    } catch (const Error& e) {
        const json err{{"code", abharm::error_code_name(e.code())},
                       {"message", e.what()},
                       {"path", ""}};
        std::cerr << abharm::io::dump_json(err, opt.precision) << "\n";
        return e.code() == ErrorCode::IoError ? 2 : 1;
    } catch (const std::exception& e) {
        const json err{{"code", "InternalError"}, {"message", e.what()}, {"path", ""}};
        std::cerr << abharm::io::dump_json(err, opt.precision) << "\n";
        return 1;
    }
}
