#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "porism/blaschke.hpp"
#include "porism/cmv.hpp"
#include "porism/ellipse.hpp"
#include "porism/numrange.hpp"
#include "porism/poncelet.hpp"
#include "porism/verify.hpp"

namespace porism::cli {

namespace {

using nlohmann::json;

struct Common {
    int samples = 720;
    double tol = kDefaultTolerance;
    std::vector<double> lambdas;
    std::string out;
    std::string svg;
    std::uint64_t seed = 20240611;
};

void add_common(CLI::App* app, Common& c, bool with_lambda) {
    app->add_option("--samples", c.samples, "samples per curve")->check(CLI::Range(16, 1 << 22));
    app->add_option("--tol", c.tol, "relative tolerance")->check(CLI::Range(1e-14, 1e-4));
    if (with_lambda) app->add_option("--lambda", c.lambdas, "angle of lambda (repeatable)");
    app->add_option("--out", c.out, "output file");
    app->add_option("--svg", c.svg, "SVG diagnostic plot");
    app->add_option("--seed", c.seed, "random seed");
}

// Writes to the file or, for an empty path, to out.
template <typename F>
void emit(const std::string& path, std::ostream& out, F&& body) {
    if (path.empty()) {
        body(out);
        return;
    }
    std::ofstream f(path);
    if (!f) throw io::InputError("cannot write " + path);
    body(f);
}

int cmd_package(const std::string& input, const Common& c, std::ostream& out, std::ostream& err) {
    const auto foci = io::foci_from_json(io::read_json_file(input));
    for (cplx f : foci)
        if (!(std::abs(f) < 1.0)) {
            err << "package: focus " << f << " lies outside the open unit disk; use `porism bezout` for "
                   "exterior or unimodular foci\n";
            return kInputError;
        }
    const poncelet::PonceletFamily fam(foci);
    const auto samples = poncelet::sample_package(fam, c.samples);
    emit(c.out, out, [&](std::ostream& os) { io::write_curve_csv(os, samples); });
    if (!c.svg.empty()) {
        std::vector<io::SvgLayer> layers;
        for (int k = 1; k <= fam.n() / 2; ++k) {
            io::SvgLayer l{{}, true, "blue"};
            for (const auto& s : samples)
                if (s.k == k) l.points.push_back(s.point);
            layers.push_back(std::move(l));
        }
        const std::vector<double> lambdas = c.lambdas.empty() ? std::vector<double>{0.0} : c.lambdas;
        for (double t : lambdas) {
            const auto poly = blaschke::solve(fam.product(), unit(t), c.tol);
            for (int k = 1; k <= fam.n() / 2; ++k) {
                io::SvgLayer l{{}, false, "red"};
                // Star polygon joining every k-th vertex.
                const int n = fam.n();
                int idx = 0;
                for (int step = 0; step <= n; ++step, idx = (idx + k) % n) l.points.push_back(poly[static_cast<std::size_t>(idx)]);
                layers.push_back(std::move(l));
            }
        }
        emit(c.svg, out, [&](std::ostream& os) { io::write_svg(os, layers); });
    }
    return kOk;
}

int cmd_bezout(const std::string& input, const std::vector<double>& z0s, const Common& c, std::ostream& out) {
    const auto foci = io::foci_from_json(io::read_json_file(input));
    const auto p = poncelet::bezoutian_build(foci, std::max(c.tol, 1e-9));
    out << "N=" << p.N << " m=" << p.m << " d=" << p.d << " n=" << p.n() << '\n';
    bool ok = true;
    for (double t : z0s) {
        const auto r = poncelet::on_circle_solutions(p, unit(t));
        out << "z0=" << io::num(t) << " on_circle=" << r.on_circle.size() << " off_circle=" << r.off_circle.size()
            << " expected=" << r.expected << (r.perturbed ? " (z0 perturbed)" : "") << (r.matches() ? "" : " MISMATCH")
            << '\n';
        ok = ok && r.matches();
    }
    if (p.d == 0) {
        const auto m = poncelet::mirman_condition(foci, c.samples);
        out << "mirman=" << (m.holds ? "holds" : "fails") << " min=" << io::num(m.min_value) << '\n';
    }
    if (!c.out.empty()) {
        json coeffs = json::array();
        for (const auto& row : p.coeffs) {
            json r = json::array();
            for (cplx v : row) r.push_back(io::complex_json(v));
            coeffs.push_back(r);
        }
        emit(c.out, out, [&](std::ostream& os) {
            os << json{{"N", p.N}, {"m", p.m}, {"d", p.d}, {"n", p.n()}, {"coeffs", coeffs}}.dump(2) << '\n';
        });
    }
    return ok ? kOk : kVerificationFailure;
}

int cmd_numrange(const std::string& input, const Common& c, std::ostream& out, std::ostream& err) {
    const ComplexMatrix a = io::matrix_from_json(io::read_json_file(input));
    const auto b = numrange::boundary(a, c.samples);
    emit(c.out, out, [&](std::ostream& os) { io::write_boundary_csv(os, b); });
    if (a.size() == 2) {
        const auto e = numrange::ellipse_range_2x2(a, c.tol);
        err << "elliptical range: " << io::component_json(e).dump() << '\n';
    }
    if (!c.svg.empty()) {
        io::SvgLayer l{{}, true, "blue"};
        for (const auto& s : b) l.points.push_back(s.point);
        emit(c.svg, out, [&](std::ostream& os) { io::write_svg(os, {l}); });
    }
    return kOk;
}

int cmd_ellipse_close(cplx f1, cplx f2, int n, std::ostream& out) {
    if (!(std::abs(f1) < 1.0 && std::abs(f2) < 1.0)) throw io::InputError("foci must lie in the open unit disk");
    const double s = ellipse::closure_semiaxis(f1, f2, n);
    out << io::component_json({f1, f2, s}).dump() << '\n';
    return kOk;
}

int cmd_ellipse_factor(const std::string& input, const Common& c, std::ostream& out) {
    const auto foci = io::foci_from_json(io::read_json_file(input));
    for (cplx f : foci)
        if (!(std::abs(f) < 1.0)) throw io::InputError("foci must lie in the open unit disk");
    const auto comps = ellipse::package_factor(foci);
    json arr = json::array();
    for (const auto& e : comps) arr.push_back(io::component_json(e));
    const double res = ellipse::factorization_residual(foci, comps, 100, c.seed);
    emit(c.out, out, [&](std::ostream& os) { os << json{{"components", arr}, {"residual", res}}.dump(2) << '\n'; });
    return res <= 1e-7 ? kOk : kVerificationFailure;
}

int cmd_ellipse_iterate(cplx f1, cplx f2, double s, double w0, int steps, bool inner, const Common& c,
                        std::ostream& out) {
    if (!(std::abs(f1) < 1.0 && std::abs(f2) < 1.0) || s < 0.0) throw io::InputError("need foci in the disk and s >= 0");
    const ellipse::EllipseComponent e{f1, f2, s};
    if (inner) {
        const auto w = ellipse::inner_iteration(e, 0, steps);
        emit(c.out, out, [&](std::ostream& os) { os << io::foci_json(w).dump() << '\n'; });
        return kOk;
    }
    const auto o = ellipse::circular_iteration(e, unit(w0), steps);
    emit(c.out, out, [&](std::ostream& os) {
        os << "i,re,im\n";
        for (std::size_t i = 0; i < o.points.size(); ++i)
            os << i << ',' << io::num(o.points[i].real()) << ',' << io::num(o.points[i].imag()) << '\n';
    });
    out << "# closure=" << o.closure << " max_vieta=" << io::num(o.max_vieta) << '\n';
    return kOk;
}

int cmd_verify(const std::string& suite, const Common& c, std::ostream& out) {
    std::vector<int> ids;
    if (suite == "all") ids = verify::criterion_ids();
    else {
        try {
            const int id = std::stoi(suite);
            if (id < 1 || id > 11) throw std::out_of_range("suite");
            ids.push_back(id);
        } catch (const std::logic_error&) {
            throw io::InputError("unknown suite '" + suite + "' (expected 1..11 or all)");
        }
    }
    bool ok = true;
    json report = json::array();
    for (int id : ids) {
        const auto r = verify::run_criterion(id, c.seed);
        out << (r.pass() ? "PASS" : "FAIL") << " criterion " << id << ": " << r.title << '\n';
        json checks = json::array();
        for (const auto& ch : r.checks) {
            out << "    " << (ch.pass ? "ok  " : "FAIL") << ' ' << ch.name << " value=" << io::num(ch.value)
                << " bound=" << io::num(ch.bound) << '\n';
            checks.push_back({{"name", ch.name}, {"value", std::isfinite(ch.value) ? json(ch.value) : json(nullptr)},
                              {"bound", ch.bound}, {"pass", ch.pass}});
        }
        report.push_back({{"criterion", id}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}});
        ok = ok && r.pass();
    }
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw io::InputError("cannot write " + c.out);
        f << report.dump(2) << '\n';
    }
    return ok ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poncelet curve packages: sampling, Bezoutian counts, numerical ranges, ellipses", "porism"};
    app.require_subcommand(1);

    Common pk, bz, nr, el, vf;
    std::string package_in, bezout_in, numrange_in, factor_in, suite = "all";
    std::vector<double> z0s{0.0};

    auto* package = app.add_subcommand("package", "sample C_1..C_[n/2] for foci in the disk");
    package->add_option("foci", package_in, "foci JSON")->required();
    add_common(package, pk, true);

    auto* bezout = app.add_subcommand("bezout", "Bezoutian counts N, m, d and on-circle solutions");
    bezout->add_option("foci", bezout_in, "foci JSON")->required();
    bezout->add_option("--z0", z0s, "angles of z0 (repeatable)");
    add_common(bezout, bz, false);

    auto* numr = app.add_subcommand("numrange", "numerical range boundary by support samples");
    numr->add_option("matrix", numrange_in, "matrix JSON")->required();
    add_common(numr, nr, false);

    auto* ell = app.add_subcommand("ellipse", "ellipse closure, factorization and iterations");
    ell->require_subcommand(1);
    std::string f1s = "0", f2s = "0";
    int n = 3, steps = 64;
    double s = 0.5, w0 = 0.0;
    bool inner = false;
    auto* close = ell->add_subcommand("close", "semiaxis closing after n steps");
    close->add_option("--f1", f1s, "focus re,im");
    close->add_option("--f2", f2s, "focus re,im");
    close->add_option("--n", n, "polygon size")->check(CLI::Range(3, 1000));
    auto* factor = ell->add_subcommand("factor", "split package foci into ellipse components");
    factor->add_option("foci", factor_in, "foci JSON")->required();
    auto* iterate = ell->add_subcommand("iterate", "circular or inner iteration");
    iterate->add_option("--f1", f1s, "focus re,im");
    iterate->add_option("--f2", f2s, "focus re,im");
    iterate->add_option("--s", s, "minor semiaxis")->check(CLI::NonNegativeNumber);
    iterate->add_option("--w0", w0, "start angle");
    iterate->add_option("--steps", steps, "maximum steps")->check(CLI::Range(1, 100000));
    iterate->add_flag("--inner", inner, "inner iteration from 0 and f1");
    add_common(ell, el, false);

    auto* ver = app.add_subcommand("verify", "acceptance suites");
    ver->add_option("suite", suite, "1..11 or all");
    add_common(ver, vf, false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "porism: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*package) return cmd_package(package_in, pk, out, err);
        if (*bezout) return cmd_bezout(bezout_in, z0s, bz, out);
        if (*numr) return cmd_numrange(numrange_in, nr, out, err);
        if (*close) return cmd_ellipse_close(io::parse_complex(f1s), io::parse_complex(f2s), n, out);
        if (*factor) return cmd_ellipse_factor(factor_in, el, out);
        if (*iterate) return cmd_ellipse_iterate(io::parse_complex(f1s), io::parse_complex(f2s), s, w0, steps, inner, el, out);
        if (*ver) return cmd_verify(suite, vf, out);
    } catch (const io::InputError& e) {
        err << "porism: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "porism: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "porism: numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kOk;
}

}  // namespace porism::cli
