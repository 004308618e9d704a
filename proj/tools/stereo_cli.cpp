// stereo: exact stereographic correspondences between boundary fields and
// rational points of circles and spheres, from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
// invariant violation (a certificate is dumped to stderr).

#include "stereo/approx.hpp"
#include "stereo/errors.hpp"
#include "stereo/figures.hpp"
#include "stereo/graph.hpp"
#include "stereo/markoff.hpp"
#include "stereo/spectrum.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace stereo;

struct Output {
    std::string path;  // empty = stdout
    std::ostringstream buffer;

    int flush() {
        if (path.empty()) {
            std::cout << buffer.str();
            return 0;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open output file: " << path << "\n";
            return 2;
        }
        f << buffer.str();
        return 0;
    }
};

std::vector<SpaceCase> parse_cases(const std::string& name) {
    if (name == "all") return {kAllCases, kAllCases + 6};
    return {parse_space_case(name)};
}

std::string quality_decimal(const RatInterval& v) {
    return "[" + decimal_string(v.lo, 12) + ", " + decimal_string(v.hi, 12) + "]";
}

std::string real_str(const QuadReal& v) {
    std::string s = v.str();
    if (!v.is_rational()) s += " ~ " + decimal_string(v.enclosure(160).mid(), 20);
    return s;
}

/// Uniform random boundary element with K-height <= roughly bound^2.
KElement random_element(std::mt19937_64& rng, KCase field, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    Rational u(num(rng), den(rng));
    switch (field) {
        case KCase::Q: return KElement::from_rational(u);
        case KCase::Sqrt2Q: return KElement::from_sqrt2_multiple(u);
        default: return KElement::from_omega_coords(field, u, Rational(num(rng), den(rng)));
    }
}

int run_map(Output& out, const std::string& case_name, const std::string& value, bool inverse,
            bool json) {
    SpaceCase space = parse_space_case(case_name);
    const SpaceSpec& spec = space_spec(space);
    if (!inverse) {
        KElement z = KElement::parse(spec.boundary_field, value);
        SpherePoint P = map_to_sphere(z, space, true);
        if (json)
            out.buffer << "{\"case\":\"" << to_string(space) << "\",\"boundary\":\"" << z.str()
                       << "\",\"point\":\"" << P.str() << "\",\"height\":" << P.height() << "}\n";
        else
            out.buffer << P.str() << " height=" << P.height() << "\n";
    } else {
        SpherePoint P = SpherePoint::parse(space, value);
        KElement z = unmap(P, true);
        if (json)
            out.buffer << "{\"case\":\"" << to_string(space) << "\",\"point\":\"" << P.str()
                       << "\",\"boundary\":\"" << z.str() << "\",\"k_height\":"
                       << (z.is_infinity() ? Int(0) : z.height()) << "}\n";
        else
            out.buffer << z.str()
                       << (z.is_infinity() ? std::string()
                                           : " k_height=" + z.height().str())
                       << "\n";
    }
    return 0;
}

int run_height(Output& out, const std::string& case_name, const std::string& value, bool json) {
    SpaceCase space = parse_space_case(case_name);
    const SpaceSpec& spec = space_spec(space);
    KElement z = KElement::parse(spec.boundary_field, value);
    if (z.is_infinity()) {
        out.buffer << (json ? "{\"boundary\":\"inf\",\"sphere_height\":1}\n"
                            : "inf sphere_height=1\n");
        return 0;
    }
    Int hk = z.height();
    Int hs = closed_form_height(z, space);
    if (json)
        out.buffer << "{\"case\":\"" << to_string(space) << "\",\"boundary\":\"" << z.str()
                   << "\",\"k_height\":" << hk << ",\"sphere_height\":" << hs << "}\n";
    else
        out.buffer << z.str() << " k_height=" << hk << " sphere_height=" << hs << "\n";
    return 0;
}

int run_verify_phi(Output& out, const std::string& case_name, unsigned samples, unsigned seed,
                   long bound, bool json) {
    bool all_ok = true;
    if (json) out.buffer << "[";
    bool first = true;
    for (SpaceCase space : parse_cases(case_name)) {
        const SpaceSpec& spec = space_spec(space);
        std::mt19937_64 rng(seed);
        unsigned failures = 0;
        for (unsigned i = 0; i < samples; ++i) {
            KElement z1 = random_element(rng, spec.boundary_field, bound);
            KElement z2 = random_element(rng, spec.boundary_field, bound);
            if (z1 == z2) continue;
            PhiConditionReport r = verify_phi_conditions(space, z1, z2);
            if (!r.phi_i_holds || !r.phi_ii_holds) {
                ++failures;
                std::cerr << to_string(space) << ": condition failed at z1=" << z1.str()
                          << " z2=" << z2.str() << "\n";
            }
        }
        if (failures > 0) all_ok = false;
        if (json) {
            if (!first) out.buffer << ",";
            first = false;
            out.buffer << "{\"case\":\"" << to_string(space) << "\",\"samples\":" << samples
                       << ",\"failures\":" << failures << "}";
        } else {
            out.buffer << to_string(space) << ": " << samples << " samples, " << failures
                       << " failures\n";
        }
    }
    if (json) out.buffer << "]\n";
    return all_ok ? 0 : 1;
}

int run_horoball(Output& out, const std::string& case_name, const std::string& value, bool json) {
    SpaceCase space = parse_space_case(case_name);
    const SpaceSpec& spec = space_spec(space);
    KElement z = KElement::parse(spec.boundary_field, value);
    Horoball b = horoball_on_sphere(z, space);
    if (json) {
        out.buffer << "{\"case\":\"" << to_string(space) << "\",\"point\":\"" << b.point.str()
                   << "\",\"radius\":\"" << b.radius.str() << "\",\"radius_decimal\":\""
                   << decimal_string(b.radius.enclosure(160).mid(), 20) << "\",\"center\":[";
        for (size_t i = 0; i < b.center.size(); ++i)
            out.buffer << (i ? "," : "") << "\"" << b.center[i].str() << "\"";
        out.buffer << "]}\n";
    } else {
        out.buffer << "point " << b.point.str() << "\nradius " << real_str(b.radius) << "\n";
        for (size_t i = 0; i < b.center.size(); ++i)
            out.buffer << "center[" << i << "] " << real_str(b.center[i]) << "\n";
    }
    return 0;
}

int run_graph(Output& out, const std::string& case_name, long bound,
              const std::string& format_name, unsigned threads) {
    SpaceCase space = parse_space_case(case_name);
    TangencyGraph g = tangency_graph(space, Int(bound), threads == 0 ? 1 : threads);
    out.buffer << export_graph(g, parse_graph_format(format_name));
    return 0;
}

int run_markoff(Output& out, long bound, bool xs, bool ys, bool json) {
    Int b(bound);
    if (json) {
        out.buffer << "{\"bound\":" << b;
        if (xs || !ys) {
            out.buffer << ",\"x_values\":[";
            auto v = markoff_x_values(b);
            for (size_t i = 0; i < v.size(); ++i) out.buffer << (i ? "," : "") << v[i];
            out.buffer << "]";
        }
        if (ys || !xs) {
            out.buffer << ",\"y_values\":[";
            auto v = markoff_y_values(b);
            for (size_t i = 0; i < v.size(); ++i) out.buffer << (i ? "," : "") << v[i];
            out.buffer << "]";
        }
        if (!xs && !ys) {
            out.buffer << ",\"triples\":[";
            auto t = markoff_tree(b);
            for (size_t i = 0; i < t.size(); ++i)
                out.buffer << (i ? "," : "") << "[" << t[i].x << "," << t[i].y1 << ","
                           << t[i].y2 << "]";
            out.buffer << "]";
        }
        out.buffer << "}\n";
        return 0;
    }
    if (xs || ys) {
        auto v = xs ? markoff_x_values(b) : markoff_y_values(b);
        for (size_t i = 0; i < v.size(); ++i) out.buffer << (i ? " " : "") << v[i];
        out.buffer << "\n";
    } else {
        for (const MarkoffTriple& t : markoff_tree(b))
            out.buffer << "(" << t.x << "," << t.y1 << "," << t.y2 << ")\n";
    }
    return 0;
}

int run_spectrum(Output& out, const std::string& case_name, long bound, bool json) {
    SpaceCase space = parse_space_case(case_name);
    auto values = discrete_spectrum(space, Int(bound));
    if (json) {
        out.buffer << "[";
        for (size_t i = 0; i < values.size(); ++i) {
            const SpectrumValue& v = values[i];
            out.buffer << (i ? "," : "") << "{\"value_sq\":\"" << v.square_str()
                       << "\",\"value\":\"" << v.decimal(30) << "\",\"generator\":\""
                       << v.generator << "\"";
            if (!v.verbatim.empty()) out.buffer << ",\"verbatim\":\"" << v.verbatim << "\"";
            out.buffer << "}";
        }
        out.buffer << "]\n";
    } else {
        out.buffer << spectrum_csv(space, values);
        for (const SpectrumValue& v : values)
            if (!v.verbatim.empty())
                out.buffer << "# source prints " << v.generator << " as " << v.verbatim << "\n";
    }
    return 0;
}

TargetNumber parse_target(const std::string& text) {
    if (text == "golden") return TargetNumber::golden();
    if (text.rfind("sqrt:", 0) == 0) return TargetNumber::sqrt_of(Int(text.substr(5)));
    // p:q:m meaning p + q*sqrt(m)
    auto c1 = text.find(':');
    auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--xi", "expected golden, sqrt:<m> or <p>:<q>:<m>");
    return TargetNumber::quadratic(parse_rational(text.substr(0, c1)),
                                   parse_rational(text.substr(c1 + 1, c2 - c1 - 1)),
                                   Int(text.substr(c2 + 1)));
}

int run_estimate(Output& out, const std::string& xi, const std::string& field_name,
                 const std::string& case_name, long bound, bool json) {
    TargetNumber target = parse_target(xi);
    ApproxSpace where = case_name.empty()
                            ? ApproxSpace::boundary(field_name == "sqrt2q" ? KCase::Sqrt2Q
                                                                           : KCase::Q)
                            : ApproxSpace::sphere(parse_space_case(case_name));
    RatInterval L = estimate_lagrange(target, where, Int(bound));
    if (json)
        out.buffer << "{\"target\":\"" << target.str() << "\",\"bound\":" << bound
                   << ",\"lo\":\"" << L.lo << "\",\"hi\":\"" << L.hi << "\",\"lo_decimal\":\""
                   << decimal_string(L.lo, 12) << "\",\"hi_decimal\":\""
                   << decimal_string(L.hi, 12) << "\"}\n";
    else
        out.buffer << "L(" << target.str() << ") in " << quality_decimal(L) << "  (exact ["
                   << L.lo << ", " << L.hi << "])\n";
    return 0;
}

int run_figures(Output& out, const std::string& case_name, bool json) {
    auto cases = parse_cases(case_name);
    if (json) {
        out.buffer << "{";
        for (size_t i = 0; i < cases.size(); ++i)
            out.buffer << (i ? "," : "") << "\"" << to_string(cases[i])
                       << "\":" << figure_json(cases[i]);
        out.buffer << "}\n";
    } else {
        for (SpaceCase c : cases) {
            out.buffer << "# " << to_string(c) << "\n" << figure_table(c);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stereographic correspondences for circles and spheres"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after the subcommand too
    app.set_config("--config", "", "key=value config file; flags take precedence");

    Output out;
    bool json = false;
    unsigned threads = 1;
    app.add_option("--out", out.path, "write output to a file instead of stdout");
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--threads", threads, "worker threads where sweeps parallelize");

    std::string case_name = "s1-i", value, format = "dot", field = "q", sphere_case, xi = "golden";
    long bound = 100;
    unsigned samples = 100, seed = 1;
    bool xs = false, ys = false;

    auto* map_cmd = app.add_subcommand("map", "boundary element -> sphere point");
    map_cmd->add_option("--case", case_name, "geometry case")->required();
    map_cmd->add_option("value", value, "boundary element (or 'inf')")->required();

    auto* unmap_cmd = app.add_subcommand("unmap", "sphere point -> boundary element");
    unmap_cmd->add_option("--case", case_name, "geometry case")->required();
    unmap_cmd->add_option("value", value, "sphere point '(p1,...,pl)/q'")->required();

    auto* height_cmd = app.add_subcommand("height", "K-height and sphere height of an element");
    height_cmd->add_option("--case", case_name, "geometry case")->required();
    height_cmd->add_option("value", value, "boundary element")->required();

    auto* verify_cmd = app.add_subcommand("verify-phi", "check the two dilation conditions");
    verify_cmd->add_option("--case", case_name, "geometry case or 'all'")->required();
    verify_cmd->add_option("--samples", samples, "random pairs per case");
    verify_cmd->add_option("--seed", seed, "PRNG seed");
    verify_cmd->add_option("--coeff-bound", bound, "coefficient range of sampled elements");

    auto* horo_cmd = app.add_subcommand("horoball", "horoball at the image of an element");
    horo_cmd->add_option("--case", case_name, "geometry case")->required();
    horo_cmd->add_option("value", value, "boundary element (or 'inf')")->required();

    auto* graph_cmd = app.add_subcommand("graph", "horoball tangency graph");
    graph_cmd->add_option("--case", case_name, "geometry case")->required();
    graph_cmd->add_option("--bound", bound, "sphere height bound")->required();
    graph_cmd->add_option("--format", format, "dot, json or svg-circles");

    auto* markoff_cmd = app.add_subcommand("markoff", "solutions of 2x^2+y1^2+y2^2=4xy1y2");
    markoff_cmd->add_option("--bound", bound, "component bound")->required();
    markoff_cmd->add_flag("--xs", xs, "distinct x-values only");
    markoff_cmd->add_flag("--ys", ys, "distinct y-values only");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "initial discrete Lagrange spectrum");
    spectrum_cmd->add_option("--case", case_name, "geometry case")->required();
    spectrum_cmd->add_option("--bound", bound, "Markoff component bound for generated families");

    auto* est_cmd = app.add_subcommand("estimate-lagrange", "finite-sweep Lagrange estimate");
    est_cmd->add_option("--xi", xi, "target: golden, sqrt:<m> or <p>:<q>:<m>");
    est_cmd->add_option("--field", field, "boundary field: q or sqrt2q");
    est_cmd->add_option("--sphere", sphere_case, "sweep a 1-sphere case instead of a field");
    est_cmd->add_option("--bound", bound, "sweep bound")->required();

    auto* figures_cmd = app.add_subcommand("figures", "worked correspondence tables");
    figures_cmd->add_option("--case", case_name, "geometry case or 'all'");

    if (argc <= 1) {
        std::cerr << app.help();
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        int rc = 0;
        if (*map_cmd) rc = run_map(out, case_name, value, false, json);
        else if (*unmap_cmd) rc = run_map(out, case_name, value, true, json);
        else if (*height_cmd) rc = run_height(out, case_name, value, json);
        else if (*verify_cmd) rc = run_verify_phi(out, case_name, samples, seed, bound, json);
        else if (*horo_cmd) rc = run_horoball(out, case_name, value, json);
        else if (*graph_cmd) rc = run_graph(out, case_name, bound, format, threads);
        else if (*markoff_cmd) rc = run_markoff(out, bound, xs, ys, json);
        else if (*spectrum_cmd) rc = run_spectrum(out, case_name, bound, json);
        else if (*est_cmd) rc = run_estimate(out, xi, field, sphere_case, bound, json);
        else if (*figures_cmd) rc = run_figures(out, case_name, json);
        int frc = out.flush();
        return rc != 0 ? rc : frc;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
