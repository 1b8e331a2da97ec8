#include "porism/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "porism/blaschke.hpp"
#include "porism/cmv.hpp"
#include "porism/ellipse.hpp"
#include "porism/numrange.hpp"
#include "porism/opuc.hpp"
#include "porism/poncelet.hpp"

namespace porism::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* prefix, double x) {
    std::ostringstream os;
    os << prefix << x;
    return os.str();
}

Check at_most(std::string name, double value, double bound) {
    return {std::move(name), value, bound, value <= bound};
}

Check at_least(std::string name, double value, double bound) {
    return {std::move(name), value, bound, value >= bound};
}

Check equal(std::string name, double value, double expected) {
    return {std::move(name), value, expected, value == expected};
}

// Runs body, turning an exception into a failed check.
void guarded(Report& r, const std::string& name, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.checks.push_back({name + " [" + e.what() + "]", std::numeric_limits<double>::quiet_NaN(), 0.0, false});
    }
}

std::vector<cplx> random_foci(std::mt19937_64& rng, int count, double rmax) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> f;
    for (int i = 0; i < count; ++i) f.push_back(std::polar(rmax * std::sqrt(u(rng)), kTwoPi * u(rng)));
    return f;
}

double set_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    auto directed = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
        double worst = 0.0;
        for (cplx p : x) {
            double best = std::numeric_limits<double>::infinity();
            for (cplx q : y) best = std::min(best, std::abs(p - q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

std::vector<cplx> quartic_foci(double a) { return {0.0, 0.0, 0.0, a}; }

// Dual quartic of the family {0,0,0,a} at the pole u + iv, as printed.
double quartic_printed(double a, double u, double v, double* scale) {
    const double a1 = a * a - 1.0;
    const double t[] = {a1 * v * v * v * v,
                        2.0 * a1 * u * u * v * v,
                        -4.0 * a * u * v * v,
                        2.0 * (6.0 - 2.0 * a * a) * v * v,
                        a1 * u * u * u * u,
                        -8.0 * a * u * u * u,
                        (12.0 - 4.0 * a * a) * u * u,
                        16.0 * a * u,
                        -16.0};
    double sum = 0.0;
    *scale = 0.0;
    for (double x : t) {
        sum += x;
        *scale += std::abs(x);
    }
    return sum;
}

// The same quartic derived from the Bezoutian: its v² coefficient carries -8au.
double quartic_derived(double a, double u, double v, double* scale) {
    const double r2 = u * u + v * v;
    const double t[] = {(a * a - 1.0) * r2 * r2, -8.0 * a * u * r2, (12.0 - 4.0 * a * a) * r2, 16.0 * a * u, -16.0};
    double sum = 0.0;
    *scale = 0.0;
    for (double x : t) {
        sum += x;
        *scale += std::abs(x);
    }
    return sum;
}

void criterion1(Report& r, std::uint64_t) {
    for (int n = 2; n <= 6; ++n)
        guarded(r, "jordan n=" + std::to_string(n), [&] {
            const double radius = std::cos(kPi / (n + 1));
            double dev = 0.0;
            for (const auto& s : numrange::boundary(ComplexMatrix::jordan(n), 720)) {
                dev = std::max(dev, std::abs(std::abs(s.point) - radius));
                dev = std::max(dev, std::abs(s.lambda_phi - radius));
            }
            r.checks.push_back(at_most("jordan n=" + std::to_string(n) + " radius deviation", dev, 1e-8));
        });
    guarded(r, "chapple", [&] {
        const double s = ellipse::closure_semiaxis(0.0, 0.0, 3);
        r.checks.push_back(at_most("3-Poncelet circle about 0 vs J_2 radius", std::abs(s - std::cos(kPi / 3)), 1e-10));
    });
}

void criterion2(Report& r, std::uint64_t) {
    const std::vector<std::pair<double, int>> cases = {{0.3, 4}, {0.7, 4}, {0.9, 4}, {1.2, 2},
                                                       {1.5, 2}, {2.0, 2}, {2.4, 2}};
    for (const auto& [a, want] : cases)
        guarded(r, fmt("a=", a), [&, a = a, want = want] {
            const auto p = poncelet::bezoutian_build(quartic_foci(a));
            const int m = a > 1.0 ? 1 : 0;
            r.checks.push_back(equal(fmt("N,m,d for a=", a), (p.N == 5 && p.m == m && p.d == 0) ? 1.0 : 0.0, 1.0));
            const auto sol = poncelet::on_circle_solutions(p, 1.0);
            r.checks.push_back(equal(fmt("on-circle count of P(1,w) for a=", a),
                                     static_cast<double>(sol.on_circle.size()), want));
            r.checks.push_back(equal(fmt("count equals N-1-2m-d for a=", a), sol.matches() ? 1.0 : 0.0, 1.0));
        });
    const std::vector<std::pair<double, bool>> mirman = {{1.5, false}, {0.9, true}, {2.4, true}};
    for (const auto& [a, want] : mirman)
        guarded(r, fmt("mirman a=", a), [&, a = a, want = want] {
            const auto m = poncelet::mirman_condition(quartic_foci(a), 720);
            r.checks.push_back({fmt("mirman condition for a=", a) + (want ? " holds" : " fails"), m.min_value, 0.0,
                                m.holds == want});
        });
}

void criterion3(Report& r, std::uint64_t) {
    for (double a : {0.9, 2.4})
        guarded(r, fmt("a=", a), [&] {
            const auto p = poncelet::bezoutian_build(quartic_foci(a));
            double printed = 0.0;
            double derived = 0.0;
            int chords = 0;
            for (int j = 0; j < 200; ++j) {
                const cplx z = unit(kTwoPi * (j + 0.5) / 200);
                for (cplx w : poncelet::on_circle_solutions(p, z).on_circle) {
                    const auto pole = poncelet::chord_pole(z, w);
                    if (pole.infinite) continue;
                    double sc = 0.0;
                    const double g1 = quartic_printed(a, pole.value.real(), pole.value.imag(), &sc);
                    printed = std::max(printed, std::abs(g1) / sc);
                    const double g2 = quartic_derived(a, pole.value.real(), pole.value.imag(), &sc);
                    derived = std::max(derived, std::abs(g2) / sc);
                    ++chords;
                }
            }
            r.checks.push_back(at_least(fmt("tangent chords sampled for a=", a), chords, 200));
            r.checks.push_back(at_most(fmt("printed quartic relative residual, a=", a), printed, 1e-6));
            r.checks.push_back(at_most(fmt("derived quartic relative residual, a=", a), derived, 1e-6));
        });
}

void criterion4(Report& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> count(1, 7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    int sets = 0;
    guarded(r, "realizations", [&] {
        for (int t = 0; t < 20; ++t) {
            const auto f = random_foci(rng, count(rng), 0.9);
            const poncelet::PonceletFamily fam(f);
            for (int l = 0; l < 8; ++l) {
                const cplx lambda = unit(kTwoPi * u(rng));
                const auto a = opuc::paraorthogonal_extension(f, lambda);
                const auto b = blaschke::solve(fam.product(), lambda);
                const auto c = cmv::eigenvalues(cmv::unitary_dilation(fam.alphas(), lambda));
                worst = std::max({worst, set_distance(a, b), set_distance(b, c), set_distance(a, c)});
                ++sets;
            }
        }
        r.checks.push_back(equal("point sets compared", sets, 160));
        r.checks.push_back(at_most("max pairwise distance between realizations", worst, 1e-7));
    });
}

void criterion5(Report& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<int> count(2, 8);
    double coeff = 0.0, norm = 0.0;
    int bad_rank = 0;
    guarded(r, "characteristic identity", [&] {
        for (int t = 0; t < 50; ++t) {
            const auto f = random_foci(rng, count(rng), 0.9);
            const ComplexPoly phi = opuc::monic_from_foci(f);
            const ComplexMatrix m = cmv::cutoff_cmv(opuc::verblunsky_from_poly(phi));
            coeff = std::max(coeff, max_coeff_diff(cmv::char_poly(m), phi));
            if (cmv::defect_rank(m) != 1) ++bad_rank;
            norm = std::max(norm, std::abs(cmv::operator_norm(m) - 1.0));
        }
        r.checks.push_back(at_most("char_poly vs Phi, max coefficient error", coeff, 1e-8));
        r.checks.push_back(equal("draws with defect rank != 1", bad_rank, 0));
        r.checks.push_back(at_most("| ||G|| - 1 |", norm, 1e-8));
    });
}

void criterion6(Report& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 2);
    std::uniform_int_distribution<int> count(2, 5);
    for (int t = 0; t < 5; ++t)
        guarded(r, "family " + std::to_string(t), [&] {
            const auto f = random_foci(rng, count(rng), 0.8);
            const poncelet::PonceletFamily fam(f);
            const ComplexMatrix a = cmv::cutoff_cmv(fam.alphas());
            std::vector<cplx> outline;
            for (const auto& s : numrange::boundary(a, 720)) outline.push_back(s.point);
            std::vector<numrange::HalfPlane> planes;
            for (int j = 0; j < 128; ++j) {
                const auto poly = fam.polygon(unit(kTwoPi * j / 128));
                const auto hp = numrange::polygon_halfplanes(poly);
                planes.insert(planes.end(), hp.begin(), hp.end());
            }
            const auto cap = numrange::halfplane_intersection(planes);
            r.checks.push_back(at_most("Hausdorff(W(A), intersection), n=" + std::to_string(fam.n()),
                                       numrange::hausdorff(outline, cap), 2e-3));
        });
}

void criterion7(Report& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 3);
    std::uniform_int_distribution<int> count(1, 6);
    std::vector<std::vector<cplx>> families = {quartic_foci(0.9), {0.0, 0.0, 0.0, 0.0}};
    for (int t = 0; t < 4; ++t) families.push_back(random_foci(rng, count(rng), 0.9));
    for (std::size_t t = 0; t < families.size(); ++t)
        guarded(r, "family " + std::to_string(t), [&] {
            const poncelet::PonceletFamily fam(families[t]);
            double modulus = 0.0;
            double dist = std::numeric_limits<double>::infinity();
            for (const auto& s : poncelet::sample_package(fam, 48)) {
                modulus = std::max(modulus, std::abs(s.point));
                const cplx z = unit(s.theta);
                const cplx w = poncelet::tau(fam, z, s.k);
                dist = std::min(dist, poncelet::chord_distance_sq(z, w, poncelet::tau_rate_fd(fam, z, s.k)));
            }
            const std::string tag = " (family " + std::to_string(t) + ", n=" + std::to_string(fam.n()) + ")";
            r.checks.push_back({"max envelope modulus < 1" + tag, modulus, 1.0, modulus < 1.0});
            r.checks.push_back(at_least("min chord_distance_sq" + tag, dist, 1.0));
        });
}

void criterion8(Report& r, std::uint64_t seed) {
    guarded(r, "circle", [&] {
        r.checks.push_back(at_most("closure_semiaxis(0,0,3) - 1/2", std::abs(ellipse::closure_semiaxis(0.0, 0.0, 3) - 0.5),
                                   1e-10));
    });
    guarded(r, "pm half", [&] {
        const double s = ellipse::closure_semiaxis(0.5, -0.5, 3);
        r.checks.push_back(at_most("closure_semiaxis(1/2,-1/2,3) - sqrt(33)/16", std::abs(s - std::sqrt(33.0) / 16.0), 1e-8));
        r.checks.push_back(at_most("closure_semiaxis(1/2,-1/2,3) - three-step formula",
                                   std::abs(s - ellipse::semiaxis_three(0.5, -0.5)), 1e-8));
    });
    std::mt19937_64 rng(seed + 4);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    const std::vector<std::tuple<cplx, cplx, int>> cases = {
        {0.0, 0.0, 3}, {0.5, -0.5, 3}, {cplx(0.3, 0.1), cplx(-0.2, 0.25), 4}, {cplx(0.2, -0.3), cplx(0.1, 0.4), 5}};
    for (const auto& [f1, f2, n] : cases)
        guarded(r, "porism", [&, f1 = f1, f2 = f2, n = n] {
            const ellipse::EllipseComponent e{f1, f2, ellipse::closure_semiaxis(f1, f2, n)};
            int bad = 0;
            for (int j = 0; j < 32; ++j)
                if (ellipse::circular_iteration(e, unit(u(rng)), n + 1).closure != n) ++bad;
            std::ostringstream name;
            name << "starts not closing at n=" << n << " for foci " << f1 << ", " << f2;
            r.checks.push_back(equal(name.str(), bad, 0));
        });
}

void criterion9(Report& r, std::uint64_t seed) {
    std::vector<std::vector<cplx>> packages = {{0.0, 0.0, 0.0, 0.0}};
    std::mt19937_64 rng(seed + 5);
    guarded(r, "inner iteration", [&] {
        for (int t = 0; t < 3; ++t) {
            const auto f = random_foci(rng, 2, 0.5);
            const ellipse::EllipseComponent e{f[0], f[1], ellipse::closure_semiaxis(f[0], f[1], 5)};
            packages.push_back(ellipse::inner_iteration(e));
        }
    });
    for (std::size_t t = 0; t < packages.size(); ++t)
        guarded(r, "package " + std::to_string(t), [&] {
            const auto comps = ellipse::package_factor(packages[t]);
            const std::string tag = " (package " + std::to_string(t) + ")";
            r.checks.push_back(at_most("factorization residual" + tag,
                                       ellipse::factorization_residual(packages[t], comps, 100), 1e-7));
            const int n = static_cast<int>(packages[t].size()) + 1;
            int bad = 0;
            for (std::size_t k = 0; k < comps.size(); ++k) {
                if (comps[k].degenerate()) continue;
                const int rank = poncelet::component_rank(n, static_cast<int>(k) + 1).first;
                if (ellipse::circular_iteration(comps[k], unit(0.7), rank + 1).closure != rank) ++bad;
            }
            r.checks.push_back(equal("components not re-closing" + tag, bad, 0));
        });
}

void criterion10(Report& r, std::uint64_t) {
    const int expected[13] = {0, 24, 12, 8, 6, 24, 4, 24, 3, 8, 12, 24, 2};
    int bad = 0;
    for (int k = 1; k <= 12; ++k)
        if (poncelet::component_rank(24, k).first != expected[k]) ++bad;
    r.checks.push_back(equal("n=24 ranks differing from the table", bad, 0));
    for (int d : {24, 12, 8, 6, 4, 3}) {
        r.checks.push_back(equal("totient_count(24," + std::to_string(d) + ") vs phi/2",
                                 poncelet::totient_count(24, d), poncelet::euler_phi(d) / 2));
    }
    const std::vector<std::pair<int, std::vector<int>>> listed = {{24, {1, 5, 7, 11}}, {12, {2, 10}}, {8, {3, 9}},
                                                                  {6, {4}},           {4, {6}},      {3, {8}},
                                                                  {2, {12}}};
    for (const auto& [d, ks] : listed) {
        std::vector<int> got;
        for (int k = 1; k <= 12; ++k)
            if (poncelet::component_rank(24, k).first == d) got.push_back(k);
        r.checks.push_back(equal("curves of rank " + std::to_string(d) + " match the listing", got == ks ? 1 : 0, 1));
    }
}

void criterion11(Report& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed + 6);
    std::uniform_int_distribution<int> count(0, 7);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    double worst = 0.0;
    guarded(r, "derivative", [&] {
        for (int t = 0; t < 10; ++t) {
            const auto b = blaschke::BlaschkeProduct::from_foci(random_foci(rng, count(rng), 0.9));
            for (int j = 0; j < 64; ++j) {
                const double th = u(rng);
                const double h = 1e-5;
                const double fd = (b.lifted_arg(th + h) - b.lifted_arg(th - h)) / (2.0 * h);
                worst = std::max(worst, std::abs(fd - b.arg_derivative_at(th)));
            }
        }
        r.checks.push_back(at_most("max |arg_derivative - central difference|", worst, 1e-6));
    });
}

}  // namespace

bool Report::pass() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}; }

std::string criterion_title(int id) {
    switch (id) {
        case 1: return "Jordan block numerical range radius";
        case 2: return "solution counts and Mirman condition for foci {0,0,0,a}";
        case 3: return "dual quartic residual for foci {0,0,0,a}";
        case 4: return "equivalence of the three realizations";
        case 5: return "characteristic polynomial, defect rank and norm of cut-off CMV";
        case 6: return "numerical range as intersection of polygon hulls";
        case 7: return "envelope containment and chord distance";
        case 8: return "ellipse closure semiaxes and porism";
        case 9: return "ellipse package factorization";
        case 10: return "rank and totient table for n=24";
        case 11: return "argument derivative of Blaschke products";
        default: throw std::invalid_argument("unknown criterion " + std::to_string(id));
    }
}

Report run_criterion(int id, std::uint64_t seed) {
    Report r{id, criterion_title(id), {}};
    static const std::function<void(Report&, std::uint64_t)> suites[] = {
        criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
        criterion7, criterion8, criterion9, criterion10, criterion11};
    suites[id - 1](r, seed);
    return r;
}

std::vector<Report> run_all(std::uint64_t seed) {
    std::vector<Report> out;
    for (int id : criterion_ids()) out.push_back(run_criterion(id, seed));
    return out;
}

Report run_shape_checks() {
    Report r{0, "shape checks for foci {0,0,0,a}", {}};
    auto cross_signs = [](const std::vector<cplx>& pts, int& pos, int& neg) {
        pos = neg = 0;
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const cplx e1 = pts[(i + 1) % n] - pts[i];
            const cplx e2 = pts[(i + 2) % n] - pts[(i + 1) % n];
            const double c = (std::conj(e1) * e2).imag();
            if (c > 1e-14) ++pos;
            else if (c < -1e-14) ++neg;
        }
    };
    guarded(r, "convex C1", [&] {
        const poncelet::PonceletFamily fam(quartic_foci(0.3));
        std::vector<cplx> pts;
        for (const auto& s : poncelet::sample_package(fam, 360))
            if (s.k == 1) pts.push_back(s.point);
        int pos = 0, neg = 0;
        cross_signs(pts, pos, neg);
        r.checks.push_back(equal("clockwise turns along C_1, a=0.3", neg, 0));
    });
    guarded(r, "dual inflection", [&] {
        const poncelet::PonceletFamily fam(quartic_foci(0.9));
        std::vector<cplx> pts;
        for (const auto& s : poncelet::sample_package(fam, 360))
            if (s.k == 2 && !s.pole.infinite) pts.push_back(s.pole.value);
        int pos = 0, neg = 0;
        cross_signs(pts, pos, neg);
        r.checks.push_back(at_least("turning sign changes along C_2 poles, a=0.9", std::min(pos, neg), 1));
    });
    return r;
}

}  // namespace porism::verify
