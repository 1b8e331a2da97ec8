#include "io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace porism::io {

using nlohmann::json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InputError("expected a complex number as [re, im], got " + j.dump());
    const cplx z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InputError("non-finite complex number");
    return z;
}

cplx parse_complex(const std::string& text) {
    std::istringstream is(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(is >> re)) throw InputError("cannot parse complex number '" + text + "'");
    if (is >> comma) {
        if (comma != ',' || !(is >> im)) throw InputError("cannot parse complex number '" + text + "'");
    }
    std::string rest;
    if (is >> rest) throw InputError("cannot parse complex number '" + text + "'");
    return {re, im};
}

std::vector<cplx> foci_from_json(const json& j) {
    if (!j.is_object() || !j.contains("foci") || !j["foci"].is_array())
        throw InputError("foci JSON must be an object {\"foci\": [[re,im], ...]}");
    std::vector<cplx> out;
    for (const json& f : j["foci"]) out.push_back(complex_from_json(f));
    return out;
}

json foci_json(const std::vector<cplx>& foci) {
    json arr = json::array();
    for (cplx f : foci) arr.push_back(complex_json(f));
    return {{"foci", arr}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("entries") ||
        !j["entries"].is_array())
        throw InputError("matrix JSON must be {\"n\": int, \"entries\": [[[re,im],...],...]}");
    const int n = j["n"].get<int>();
    if (n < 1) throw InputError("matrix dimension must be positive");
    const json& rows = j["entries"];
    if (static_cast<int>(rows.size()) != n) throw InputError("matrix JSON: expected " + std::to_string(n) + " rows");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError("matrix JSON: row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
        for (int k = 0; k < n; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

json matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(complex_json(m(i, k)));
        rows.push_back(row);
    }
    return {{"n", m.size()}, {"entries", rows}};
}

json component_json(const ellipse::EllipseComponent& e) {
    return {{"f1", complex_json(e.f1)}, {"f2", complex_json(e.f2)}, {"s", e.s}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return os.str();
}

void write_curve_csv(std::ostream& os, const std::vector<poncelet::CurveSample>& samples) {
    os << "k,theta,point_re,point_im,pole_re,pole_im\n";
    for (const auto& s : samples) {
        os << s.k << ',' << num(s.theta) << ',' << num(s.point.real()) << ',' << num(s.point.imag()) << ',';
        if (!s.pole.infinite) os << num(s.pole.value.real()) << ',' << num(s.pole.value.imag());
        else os << ',';
        os << '\n';
    }
}

void write_boundary_csv(std::ostream& os, const std::vector<numrange::SupportSample>& samples) {
    os << "phi,lambda_phi,re,im\n";
    for (const auto& s : samples)
        os << num(s.phi) << ',' << num(s.lambda_phi) << ',' << num(s.point.real()) << ',' << num(s.point.imag()) << '\n';
}

void write_svg(std::ostream& os, const std::vector<SvgLayer>& layers) {
    constexpr double kSize = 1000.0;
    constexpr double kHalf = 1.3;
    auto px = [](double x) { return (x + kHalf) / (2.0 * kHalf) * kSize; };
    auto py = [](double y) { return (kHalf - y) / (2.0 * kHalf) * kSize; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
    os << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    os << "<circle cx=\"" << px(0.0) << "\" cy=\"" << py(0.0) << "\" r=\"" << kSize / (2.0 * kHalf)
       << "\" fill=\"none\" stroke=\"gray\"/>\n";
    os << std::setprecision(6);
    for (const auto& layer : layers) {
        if (layer.points.empty()) continue;
        os << '<' << (layer.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << layer.stroke
           << "\" points=\"";
        for (std::size_t i = 0; i < layer.points.size(); ++i) {
            if (i) os << ' ';
            os << px(layer.points[i].real()) << ',' << py(layer.points[i].imag());
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace porism::io
