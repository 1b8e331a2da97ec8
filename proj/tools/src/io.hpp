#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "porism/ellipse.hpp"
#include "porism/matrix.hpp"
#include "porism/numrange.hpp"
#include "porism/poncelet.hpp"

namespace porism::io {

/// Malformed or out-of-range input. Maps to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json complex_json(cplx z);
cplx complex_from_json(const nlohmann::json& j);
/// "re,im" or "re".
cplx parse_complex(const std::string& text);

/// {"foci": [[re,im], ...]}
std::vector<cplx> foci_from_json(const nlohmann::json& j);
nlohmann::json foci_json(const std::vector<cplx>& foci);
/// {"n": int, "entries": [[[re,im], ...], ...]} row-major.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_json(const ComplexMatrix& m);
/// {"f1": [re,im], "f2": [re,im], "s": real}
nlohmann::json component_json(const ellipse::EllipseComponent& e);

nlohmann::json read_json_file(const std::string& path);

/// Shortest round-trip decimal form (17 significant digits).
std::string num(double x);

/// k,theta,point_re,point_im,pole_re,pole_im; an infinite pole leaves its fields empty.
void write_curve_csv(std::ostream& os, const std::vector<poncelet::CurveSample>& samples);
/// phi,lambda_phi,re,im
void write_boundary_csv(std::ostream& os, const std::vector<numrange::SupportSample>& samples);

struct SvgLayer {
    std::vector<cplx> points;
    bool closed = true;
    std::string stroke = "black";
};

/// 1000×1000 picture of [-1.3, 1.3]² with the unit circle and the given polylines.
void write_svg(std::ostream& os, const std::vector<SvgLayer>& layers);

}  // namespace porism::io
