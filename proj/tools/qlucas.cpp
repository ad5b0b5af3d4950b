/*
   Copyright 2026 The qlucas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// qlucas command line tool. Exit status: 0 success, 1 verification
// failure, 2 usage error. Diagnostics go to stderr.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qlucas/qlucas.hpp"
#include "qlucas/report.hpp"
#include "svg.hpp"

namespace {

using namespace qlucas;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string poly_text;
    std::string file;
    int family = 0;
    int family_derivative = 0;
    double tol = 1e-9;
    std::size_t samples = 2048;
    std::uint64_t seed = 0;
    std::string format;
    std::string out;
    std::string at;
    std::string plane = "i";
    std::size_t steps = 180;
    bool derivative = false;
    int degree = 0;
    double epsilon = 0;
    std::size_t trials = 0;
};

void add_input(CLI::App* cmd, Options& o) {
    cmd->add_option("poly", o.poly_text, "polynomial, term syntax or JSON array");
    cmd->add_option("--file", o.file, "read the polynomial from a file");
    cmd->add_option("--family", o.family, "use X^{d-3}(X-i)(X-j)(X-k) of degree d")->check(CLI::Range(3, 200));
}

void add_common(CLI::App* cmd, Options& o, const std::vector<std::string>& formats) {
    cmd->add_option("--tol", o.tol, "tolerance")->capture_default_str();
    cmd->add_option("--samples", o.samples, "sphere samples")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    cmd->add_option("--out", o.out, "output path (default stdout)");
}

QPoly load_input(const Options& o) {
    int sources = (!o.poly_text.empty()) + (!o.file.empty()) + (o.family != 0);
    if (sources != 1) throw UsageError("give exactly one of: inline polynomial, --file, --family");
    if (o.family != 0) return family_member(o.family);
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw UsageError("cannot read " + o.file);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_poly(ss.str());
    }
    return parse_poly(o.poly_text);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string dump(const json& j) { return j.dump(2); }

std::string fmt9(double v) {
    if (std::isinf(v)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string section_csv(const std::vector<SectionSample>& sec) {
    std::string s = "theta,rho_max\n";
    for (const auto& x : sec) s += fmt9(x.theta) + "," + fmt9(x.rho_max) + "\n";
    return s;
}

SnailConfig snail_cfg(const Options& o) {
    SnailConfig cfg;
    cfg.n_samples = o.samples;
    return cfg;
}

int cmd_roots(const Options& o) {
    const QPoly p = load_input(o);
    const RootSet r = o.derivative ? critical_points(p, o.tol) : left_roots(p, o.tol);
    if (o.format == "text") {
        std::string s;
        for (const auto& q : r.isolated) s += "isolated " + to_string(q) + "\n";
        for (const auto& sp : r.spheres) s += "sphere re=" + format_real(sp.re) + " rad=" + format_real(sp.rad) + "\n";
        for (const auto& sp : r.discarded)
            s += "discarded re=" + format_real(sp.re) + " rad=" + format_real(sp.rad) + "\n";
        emit(o, s);
    } else {
        emit(o, dump(to_json(r)));
    }
    if (!r.discarded.empty()) std::cerr << "warning: " << r.discarded.size() << " sphere candidate(s) discarded\n";
    return kOk;
}

int cmd_eval(const Options& o) {
    if (o.at.empty()) throw UsageError("eval needs --at");
    const QPoly p = load_input(o);
    const Quaternion v = eval_left(p, parse_quaternion(o.at));
    emit(o, o.format == "text" ? to_string(v) : dump(json{{"value", to_json(v)}}));
    return kOk;
}

int cmd_normal(const Options& o) {
    const QPoly p = load_input(o);
    const RealPoly n = normal_poly(o.derivative ? derivative(p) : p);
    emit(o, o.format == "text" ? to_text(n) : dump(to_json(n)));
    return kOk;
}

int cmd_gl_check(const Options& o) {
    const QPoly p = load_input(o);
    GLReport r = is_gauss_lucas(p, o.tol);
    r = snail_inclusion(p, snail_cfg(o), r);
    json j = to_json(r);
    if (p.deg_or_neg() >= 3) {
        const auto ob = odd_monomial_obstruction(p, o.tol);
        j["odd_monomial_obstruction"] = {{"applies", ob.applies}, {"e", ob.e ? json(*ob.e) : json(nullptr)}};
    }
    emit(o, dump(j));
    if (!r.theorem_holds) {
        std::cerr << "error: critical point outside the snail (library bug)\n";
        return kFail;
    }
    return kOk;
}

int cmd_snail_check(const Options& o) {
    if (o.at.empty()) throw UsageError("snail-check needs --at");
    const QPoly p = load_input(o);
    const auto m = snail_contains(p, parse_quaternion(o.at), snail_cfg(o));
    emit(o, dump(to_json(m)));
    return kOk;
}

ImUnit parse_plane(const std::string& s) {
    const Quaternion q = parse_quaternion(s);
    if (q.im().is_zero()) throw UsageError("--plane must have a nonzero imaginary part");
    return ImUnit::from(q);
}

int cmd_snail_section(const Options& o) {
    const QPoly p = load_input(o);
    const ImUnit unit = parse_plane(o.plane);
    if (o.steps < 2) throw UsageError("--steps must be >= 2");
    if (o.format == "svg") {
        emit(o, section_svg(p, unit, o.steps));
        return kOk;
    }
    const auto sec = snail_cross_section(p, unit, o.steps);
    if (o.format == "json") {
        json a = json::array();
        for (const auto& x : sec) a.push_back({{"theta", real_json(x.theta)}, {"rho_max", real_json(x.rho_max)}});
        emit(o, dump(a));
    } else {
        emit(o, section_csv(sec));
    }
    return kOk;
}

int cmd_bounds(const Options& o) {
    if (o.family_derivative != 0) {
        if (!o.poly_text.empty() || !o.file.empty() || o.family != 0)
            throw UsageError("--family-derivative replaces the polynomial input");
        const QPoly p = family_member(o.family_derivative);
        const QPoly d = derivative(p);
        const auto sup = slice_sup_C(p, o.samples);
        const double classic = cauchy_C(d);
        json j;
        j["degree"] = o.family_derivative;
        j["derivative_report"] = to_json(verify_root_bound(d, o.tol, o.samples));
        j["critical_point_max_norm"] = real_json(critical_points(p, o.tol).max_norm());
        j["classic"] = real_json(classic);
        j["slice"] = real_json(sup.estimate);
        j["slice_samples"] = sup.samples;
        j["slice_argmax"] = to_json(sup.argmax.value());
        j["slice_better"] = sup.estimate < classic - 1e-9;
        j["slice_of_derivative"] = real_json(slice_sup_C(d, o.samples).estimate);
        emit(o, dump(j));
        return kOk;
    }
    const QPoly p = load_input(o);
    emit(o, dump(to_json(verify_root_bound(p, o.tol, o.samples))));
    return kOk;
}

int cmd_counterexample(const Options& o) {
    if (o.degree < 3) throw UsageError("counterexample needs --degree >= 3");
    const auto f = counterexample_family(o.degree);
    const QPoly p1 = derivative(f.p);
    const RealPoly np1 = normal_poly(p1);
    RealPoly np_expected = RealPoly::monomial(2 * static_cast<std::size_t>(o.degree) - 6);
    for (int k = 0; k < 3; ++k) np_expected = np_expected * RealPoly{1, 0, 1};
    const auto odd = real_poly_odd_part(np1);
    const auto ob = odd_monomial_obstruction(f.p, o.tol);

    struct Check {
        std::string name;
        bool ok;
    };
    const std::vector<Check> checks = {
        {"expansion of P", f.p == f.expected_p},
        {"derivative P'", p1 == f.expected_p1},
        {"N(P')", np1 == f.expected_np1},
        {"N(P) = X^{2d-6} (X^2+1)^3", normal_poly(f.p) == np_expected},
        {"single odd monomial -4 X^{2d-5}",
         odd.size() == 1 && odd[0].first == 2 * static_cast<std::size_t>(o.degree) - 5 && odd[0].second == -4.0},
        {"odd-monomial obstruction applies", ob.applies && ob.e == static_cast<std::size_t>(o.degree - 3)},
    };
    bool all = true;
    if (o.format == "json") {
        json j = {{"degree", o.degree}, {"P", to_text(f.p)}, {"P1", to_text(p1)}, {"NP1", to_text(np1)}};
        for (const auto& c : checks) j["checks"][c.name] = c.ok, all = all && c.ok;
        j["all_passed"] = all;
        emit(o, dump(j));
    } else {
        std::string s = "P    = " + to_text(f.p) + "\nP'   = " + to_text(p1) + "\nN(P')= " + to_text(np1) + "\n";
        for (const auto& c : checks) {
            s += std::string(c.ok ? "PASS " : "FAIL ") + c.name + "\n";
            all = all && c.ok;
        }
        emit(o, s);
    }
    return all ? kOk : kFail;
}

int cmd_demo_limacon(const Options& o) {
    const QPoly p = parse_poly("X^3 + X 3 + (0,2,0,0)");
    std::string s = "P = " + to_text(p) + "\n";
    bool all = true;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        s += std::string(ok ? "PASS " : "FAIL ") + name + (detail.empty() ? "" : "  [" + detail + "]") + "\n";
        all = all && ok;
    };

    const RootSet roots = left_roots(p, o.tol);
    check("V(P) = {-i, 2i}", roots.spheres.empty() && roots.isolated.size() == 2 &&
                                 approx_equal(roots.isolated[0], -Quaternion::i(), 1e-9) &&
                                 approx_equal(roots.isolated[1], Quaternion::i() * 2.0, 1e-9));
    const RootSet crit = critical_points(p, o.tol);
    check("V(P') = S (unit sphere)", crit.isolated.empty() && crit.spheres.size() == 1 &&
                                         std::abs(crit.spheres[0].re) < 1e-9 &&
                                         std::abs(crit.spheres[0].rad - 1) < 1e-9);

    const auto sec = snail_cross_section(p, ImUnit::i(), o.steps);
    double dev = 0;
    for (const auto& x : sec) dev = std::max(dev, std::abs(x.rho_max - 2 * std::cos(x.theta / 3)));
    check("section rho = 2 cos(theta/3)", dev <= 1e-3, "max deviation " + fmt9(dev));
    check("rho(0) = 2, boundary contact at 2i", std::abs(sec.front().rho_max - 2) <= 1e-6, fmt9(sec.front().rho_max));
    check("rho(pi) = 1", std::abs(sec.back().rho_max - 1) <= 1e-6, fmt9(sec.back().rho_max));

    const RealPoly np = normal_poly(p);
    const ImUnit other = orthogonal_unit(ImUnit::i());
    bool inside = true;
    for (const auto& x : sec)
        for (double f : {0.25, 0.5, 0.75, 1.0}) {
            const Quaternion q = (Quaternion::i() * std::cos(x.theta) + other.value() * std::sin(x.theta)) * (f * x.rho_max);
            inside = inside && circular_hull_contains(np, q, 1e-9);
        }
    check("sampled snail points lie in K(N(P))", inside);
    const Quaternion probe = Quaternion::i() * -1.5;
    check("-1.5i in K(N(P))", circular_hull_contains(np, probe, 1e-9));
    check("-1.5i not in sn(P)", !snail_contains(p, probe, snail_cfg(o)).contains);

    std::cout << s;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw UsageError("cannot write " + o.out);
        f << section_svg(p, ImUnit::i(), o.steps);
    }
    return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qlucas: quaternionic Gauss-Lucas toolkit"};
    app.require_subcommand(1);
    Options o;

    auto* roots = app.add_subcommand("roots", "left roots (or critical points with --derivative)");
    add_input(roots, o);
    add_common(roots, o, {"json", "text"});
    roots->add_flag("--derivative", o.derivative, "roots of P' instead of P");

    auto* eval = app.add_subcommand("eval", "evaluate P at a quaternion, powers on the left");
    add_input(eval, o);
    add_common(eval, o, {"json", "text"});
    eval->add_option("--at", o.at, "point, e.g. (0,1,0,0) or 2i");

    auto* normal = app.add_subcommand("normal", "normal polynomial N(P) = P * P^c");
    add_input(normal, o);
    add_common(normal, o, {"json", "text"});
    normal->add_flag("--derivative", o.derivative, "N(P') instead of N(P)");

    auto* gl = app.add_subcommand("gl-check", "Gauss-Lucas classification and snail inclusion");
    add_input(gl, o);
    add_common(gl, o, {"json"});

    auto* sc = app.add_subcommand("snail-check", "membership of a quaternion in sn(P)");
    add_input(sc, o);
    add_common(sc, o, {"json"});
    sc->add_option("--at", o.at, "point");

    auto* ss = app.add_subcommand("snail-section", "cross-section of sn(P) in span(I, J)");
    add_input(ss, o);
    add_common(ss, o, {"csv", "svg", "json"});
    ss->add_option("--plane", o.plane, "axis I of the section")->capture_default_str();
    ss->add_option("--steps", o.steps, "theta steps over [0, pi]")->capture_default_str();

    auto* bd = app.add_subcommand("bounds", "Cauchy-type bounds on roots and critical points");
    add_input(bd, o);
    add_common(bd, o, {"json"});
    bd->add_option("--family-derivative", o.family_derivative, "compare C(P') with sup_I C(P^I) for the family")
        ->check(CLI::Range(3, 200));

    auto* ce = app.add_subcommand("counterexample", "verify the closed forms of the degree-d family");
    add_common(ce, o, {"text", "json"});
    ce->add_option("--degree", o.degree, "degree d >= 3")->required();

    auto* demo = app.add_subcommand("demo-limacon", "reproduce the snail of X^3 + 3X + 2i (--out writes the SVG)");
    add_common(demo, o, {"text"});
    demo->add_option("--steps", o.steps, "theta steps")->capture_default_str();

    auto* probe = app.add_subcommand("probe", "perturbation stability of the classification");
    add_input(probe, o);
    add_common(probe, o, {"json"});
    probe->add_option("--epsilon", o.epsilon, "perturbation radius")->required();
    probe->add_option("--trials", o.trials, "number of trials")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*roots) return cmd_roots(o);
        if (*eval) return cmd_eval(o);
        if (*normal) return cmd_normal(o);
        if (*gl) return cmd_gl_check(o);
        if (*sc) return cmd_snail_check(o);
        if (*ss) return cmd_snail_section(o);
        if (*bd) return cmd_bounds(o);
        if (*ce) return cmd_counterexample(o);
        if (*demo) return cmd_demo_limacon(o);
        if (*probe) {
            const QPoly p = load_input(o);
            const double f = perturbation_probe(p, o.epsilon, o.trials, o.seed, o.tol);
            emit(o, dump(json{{"epsilon", o.epsilon}, {"trials", o.trials}, {"seed", o.seed}, {"stable_fraction", f}}));
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
