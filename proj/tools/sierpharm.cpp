// Copyright 2026 The sierpharm Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "sierpharm/errors.hpp"
#include "sierpharm/expansion.hpp"
#include "sierpharm/harmonic.hpp"
#include "sierpharm/holder.hpp"
#include "sierpharm/io.hpp"
#include "sierpharm/matrix.hpp"
#include "sierpharm/render.hpp"
#include "sierpharm/tangent.hpp"

namespace {

using namespace sierpharm;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct IoError : Error {
    using Error::Error;
};

struct Options {
    std::string format = "text";
    int digits = 6;
};

std::string num(double x, const Options& o) { return format_number(x, o.digits); }

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- eval

struct EvalArgs {
    std::string point;
    unsigned long n = 40;
    std::string form;
};

int cmd_eval(const EvalArgs& a, const Options& o) {
    const Rational s = parse_point(a.point);
    if (sgn(s) < 0 || s > 1) throw DomainError("point " + to_string(s) + " outside [0,1]");
    const bool dyadic = mpz_popcount(s.get_den().get_mpz_t()) == 1;
    const bool scalar = !a.form.empty();
    const LinearForm form = scalar ? parse_linear_form(a.form) : LinearForm::phi();

    if (dyadic) {
        const Vec3Q u = u_exact_dyadic(s);
        if (o.format == "json") {
            json j{{"s", to_string(s)}, {"exact", true}};
            if (scalar) {
                j["form"] = to_string(form);
                j["value"] = to_string(form.apply(u));
            } else {
                j["value"] = {to_string(u.x), to_string(u.y), to_string(u.z)};
            }
            emit_json(j);
        } else if (scalar) {
            std::cout << to_string(form.apply(u)) << "\n";
        } else {
            std::cout << to_string(u.x) << " " << to_string(u.y) << " " << to_string(u.z) << "\n";
        }
        return 0;
    }

    const Expansion e = expand_default(s);
    if (scalar) {
        const ScalarApprox v = uacb_eval(form, e, a.n);
        if (o.format == "json") {
            emit_json({{"s", to_string(s)},
                       {"exact", false},
                       {"form", to_string(form)},
                       {"n", a.n},
                       {"value", rounded(v.value, o.digits)},
                       {"error_bound", v.error_bound}});
        } else {
            std::cout << num(v.value, o) << " (error <= " << format_number(v.error_bound, 3) << ")\n";
        }
        return 0;
    }
    const ApproxPoint p = u_approx(e, a.n);
    if (o.format == "json") {
        emit_json({{"s", to_string(s)},
                   {"exact", false},
                   {"n", a.n},
                   {"value", {rounded(p.value[0], o.digits), rounded(p.value[1], o.digits), rounded(p.value[2], o.digits)}},
                   {"error_bound", p.error_bound}});
    } else {
        std::cout << num(p.value[0], o) << " " << num(p.value[1], o) << " " << num(p.value[2], o)
                  << " (error <= " << format_number(p.error_bound, 3) << ")\n";
    }
    return 0;
}

// ---- exponent

void print_report_text(const HolderReport& r, const Options& o) {
    std::cout << "s             " << to_string(r.s) << "\n"
              << "expansion     " << to_string(r.expansion) << "\n"
              << "period        " << r.expansion.period << " (n = " << r.period_length << ")\n"
              << "scaled trace  " << r.scaled_trace.get_str() << "\n"
              << "lambda        " << to_string(r.lambda) << " ~ " << num(r.lambda.to_double(), o) << "\n"
              << "alpha         " << num(r.alpha.midpoint, o) << " in [" << format_number(r.alpha.lower, 17) << ", "
              << format_number(r.alpha.upper, 17) << "]\n"
              << "class         " << to_string(r.derivative_class) << "\n";
}

int cmd_exponent(const std::string& point, const Options& o) {
    const HolderReport r = alpha_rational(parse_point(point));
    if (o.format == "json") {
        emit_json(to_json(r, o.digits));
    } else {
        print_report_text(r, o);
    }
    return 0;
}

// ---- classify

int cmd_classify(const std::string& point, const std::string& form_text, const Options& o) {
    const LinearForm form = parse_linear_form(form_text);
    const Rational s = parse_point(point);
    const QuadDir dir = tangent_direction(s);
    const KernelVerdict verdict = kernel_test(form, dir);
    const DerivativeClass c = classify_uacb(form, s);
    if (o.format == "json") {
        emit_json({{"s", to_string(s)},
                   {"form", to_string(form)},
                   {"derivative_class", to_string(c)},
                   {"kernel", to_string(verdict)},
                   {"direction_chart", to_string(dir.chart)}});
    } else {
        std::cout << to_string(c) << " (kernel test: " << to_string(verdict) << ")\n";
    }
    return 0;
}

// ---- table

struct TableArgs {
    std::size_t max_length = 7;
    bool dedupe = true;
    bool check = false;
    bool csv = false;
    bool json = false;
};

int cmd_table(const TableArgs& a, const Options& o) {
    const auto rows = generate_table(a.max_length, a.dedupe);
    std::string format = o.format;
    if (a.csv) format = "csv";
    if (a.json) format = "json";
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r, o.digits));
        emit_json(arr);
    } else if (format == "csv") {
        write_table_csv(std::cout, rows, o.digits);
    } else {
        std::printf("%-10s %-12s %3s %12s %10s  %s\n", "s", "period", "n", "5^n tr", "alpha", "class");
        for (const auto& r : rows) {
            std::printf("%-10s %-12s %3zu %12s %10s  %s\n", to_string(r.s).c_str(), r.expansion.period.c_str(),
                        r.period_length, r.scaled_trace.get_str().c_str(), num(r.alpha.midpoint, o).c_str(),
                        to_string(r.derivative_class).c_str());
        }
    }
    if (a.check) {
        const auto problems = compare_with_reference(rows);
        for (const auto& p : problems) std::cerr << "check: " << p << "\n";
        std::cerr << (problems.empty() ? "check: all reference rows match\n" : "check: FAILED\n");
        return problems.empty() ? 0 : 1;
    }
    return 0;
}

// ---- direction

struct DirectionArgs {
    std::string point;
    std::string side = "auto";
    double tol = 1e-12;
};

int cmd_direction(const DirectionArgs& a, const Options& o) {
    const Rational s = parse_point(a.point);
    Side side = s == 1 ? Side::Left : Side::Right;
    if (a.side == "left") side = Side::Left;
    if (a.side == "right") side = Side::Right;
    const QuadDir exact = direction_at_rational_exact(s, side);
    const ProjDir approx = direction_at(expand_default(s), side, a.tol);
    const auto unit = chart_to_unit_vector(exact.chart.to_double());
    const char* side_name = side == Side::Left ? "left" : "right";
    if (o.format == "json") {
        emit_json({{"s", to_string(s)},
                   {"side", side_name},
                   {"chart", to_string(exact.chart)},
                   {"chart_approx", rounded(exact.chart.to_double(), o.digits)},
                   {"iterated_chart", approx.chart},
                   {"iterated_error_bound", approx.error_bound},
                   {"unit_vector", {rounded(unit[0], o.digits), rounded(unit[1], o.digits), rounded(unit[2], o.digits)}}});
    } else {
        std::cout << "side          " << side_name << "\n"
                  << "chart         " << to_string(exact.chart) << " ~ " << num(exact.chart.to_double(), o) << "\n"
                  << "unit vector   " << num(unit[0], o) << " " << num(unit[1], o) << " " << num(unit[2], o) << "\n";
    }
    return 0;
}

// ---- render

struct RenderArgs {
    std::string target;
    unsigned level = 8;
    int width = 800;
    int height = 720;
    std::string out;
    std::string boundary;
};

int cmd_render(const RenderArgs& a, const Options&) {
    const RenderConfig config{a.level, a.width, a.height};
    SvgDocument doc;
    if (a.target == "curve") {
        doc = render_curve(config);
    } else if (a.target == "triangle") {
        doc = render_triangle(config, parse_boundary(a.boundary));
    } else {
        throw ParseError("unknown render target '" + a.target + "' (expected curve or triangle)");
    }
    if (a.out.empty() || a.out == "-") {
        std::cout << doc.text;
        return 0;
    }
    std::ofstream f(a.out, std::ios::binary);
    if (!f) throw IoError("cannot open '" + a.out + "' for writing");
    f << doc.text;
    if (!f.flush()) throw IoError("failed writing '" + a.out + "'");
    std::cerr << "wrote " << a.out << " (" << doc.count << (a.target == "curve" ? " points" : " segments") << ")\n";
    return 0;
}

// ---- experiment

struct ExperimentArgs {
    std::string name;
    std::size_t max_length = 12;
    std::size_t bits = 4096;
    std::size_t trials = 100;
    std::uint64_t seed = 7;
};

int cmd_experiment(const ExperimentArgs& a, const Options& o) {
    if (a.name == "maxrun") {
        const auto rows = maxrun_experiment(a.max_length);
        if (o.format == "json") {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(to_json(r, o.digits));
            emit_json(arr);
        } else {
            std::size_t above = 0;
            for (const auto& r : rows) {
                std::cout << r.period << " " << num(r.alpha.midpoint, o) << " " << (r.above_one ? "> 1" : "< 1") << "\n";
                above += r.above_one;
            }
            std::cout << above << "/" << rows.size() << " classes with alpha > 1\n";
        }
        return 0;
    }
    if (a.name == "lyapunov") {
        const LyapunovSummary l = lyapunov_random_estimate(a.bits, a.trials, a.seed);
        if (o.format == "json") {
            emit_json(to_json(l, o.digits));
        } else {
            std::cout << "bits " << l.nbits << ", trials " << l.trials << ", seed " << l.seed << "\n"
                      << "mean " << num(l.mean, o) << ", median " << num(l.median, o) << "\n"
                      << "fraction above 1: " << num(l.fraction_above_one, o) << "\n";
            if (l.low_confidence) std::cout << "low confidence: fewer than " << kLyapunovConfidentBits << " bits\n";
        }
        return 0;
    }
    throw ParseError("unknown experiment '" + a.name + "' (expected maxrun or lyapunov)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic functions on the Sierpinski triangle: evaluation, exponents and tangents"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--precision", opt.digits, "Significant digits in numeric output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    EvalArgs eval;
    auto* c_eval = app.add_subcommand("eval", "Evaluate u(s) (exact at dyadics)");
    c_eval->add_option("s", eval.point, "Point: p/q, decimal or 0.pre(period)")->required();
    c_eval->add_option("-n,--depth", eval.n, "Word length for non-dyadic points")->capture_default_str();
    c_eval->add_option("--form", eval.form, "Linear form: phi, psi, chi, xi or a,b,c");

    std::string exp_point;
    auto* c_exp = app.add_subcommand("exponent", "Hölder exponent at a rational point");
    c_exp->add_option("s", exp_point, "Rational point")->required();

    std::string cls_point, cls_form;
    auto* c_cls = app.add_subcommand("classify", "Derivative class of a linear form of u");
    c_cls->add_option("s", cls_point, "Rational point")->required();
    c_cls->add_option("form", cls_form, "phi, psi, chi, xi or a,b,c")->required();

    TableArgs table;
    auto* c_tab = app.add_subcommand("table", "Exponents for all periods up to a length");
    c_tab->add_option("max_len", table.max_length, "Largest period length")->required();
    c_tab->add_flag("--dedupe-complement,!--no-dedupe-complement", table.dedupe,
                    "Merge classes related by bit complement (default on)");
    c_tab->add_flag("--check", table.check, "Compare with the built-in reference rows");
    c_tab->add_flag("--csv", table.csv, "CSV output");
    c_tab->add_flag("--json", table.json, "JSON output");

    DirectionArgs dir;
    auto* c_dir = app.add_subcommand("direction", "Tangent direction of u at a rational point");
    c_dir->add_option("s", dir.point, "Rational point")->required();
    c_dir->add_option("--side", dir.side, "right, left or auto")
        ->check(CLI::IsMember({"auto", "right", "left"}))
        ->capture_default_str();
    c_dir->add_option("--tol", dir.tol, "Tolerance of the iterated chart")->capture_default_str();

    RenderArgs render;
    auto* c_ren = app.add_subcommand("render", "Write an SVG of the curve u or the harmonic image of S_n");
    c_ren->add_option("target", render.target, "curve or triangle")->required();
    c_ren->add_option("-n,--level", render.level, "Level")->capture_default_str();
    c_ren->add_option("--width", render.width, "Canvas width")->capture_default_str();
    c_ren->add_option("--height", render.height, "Canvas height")->capture_default_str();
    c_ren->add_option("-o,--out", render.out, "Output file (default stdout)");
    c_ren->add_option("--boundary", render.boundary, "Triangle mode corner values 'x,y,z;x,y,z;x,y,z'");

    ExperimentArgs ex;
    auto* c_ex = app.add_subcommand("experiment", "maxrun or lyapunov");
    c_ex->add_option("name", ex.name, "maxrun or lyapunov")->required();
    c_ex->add_option("--max-len", ex.max_length, "maxrun: largest period length")->capture_default_str();
    c_ex->add_option("--bits", ex.bits, "lyapunov: bits per word")->capture_default_str();
    c_ex->add_option("--trials", ex.trials, "lyapunov: number of words")->capture_default_str();
    c_ex->add_option("--seed", ex.seed, "lyapunov: RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitParse;
    }

    try {
        if (*c_eval) return cmd_eval(eval, opt);
        if (*c_exp) return cmd_exponent(exp_point, opt);
        if (*c_cls) return cmd_classify(cls_point, cls_form, opt);
        if (*c_tab) return cmd_table(table, opt);
        if (*c_dir) return cmd_direction(dir, opt);
        if (*c_ren) return cmd_render(render, opt);
        if (*c_ex) return cmd_experiment(ex, opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
