#pragma once

#include <string>

#include <json.hpp>

#include "qspectra/fcalc.hpp"
#include "qspectra/powan.hpp"
#include "qspectra/qmatrix.hpp"
#include "qspectra/sspectrum.hpp"
#include "qspectra/yosida.hpp"

namespace qspectra::io {

using nlohmann::json;

// Wire formats. A quaternion is the 4-array [w, x, y, z]; a matrix is
// {"n": n, "entries": [[[w,x,y,z], ...], ...]} row-major. These are the
// contracts every CLI command reads and writes.
json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

json to_json(const QMatrix& t);
QMatrix qmatrix_from_json(const json& j);

json to_json(const SSpectrum& s);  // [{x, y, modulus}, ...]

json to_json(const PowerReport& r);
json to_json(const KreissReport& r);
json to_json(const KTReport& r);
json to_json(const RittReport& r);
json to_json(const YosidaScanReport& r);
json to_json(const GelfandRigidityReport& r);
json to_json(const SpectralMappingReport& r);

// 17 significant digits: the CSV doubles as a regression baseline.
std::string format_double(double v);

std::string sequence_csv(const std::vector<double>& values,
                         const std::string& value_header, int first_n = 0);
std::string yosida_csv(const YosidaScanReport& r);
std::string kreiss_csv(const KreissReport& r);
std::string ritt_csv(const RittReport& r);
std::string axis_label(const UnitImaginary& axis);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

QMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const QMatrix& t);

// Parses "x,y,z" into a normalized slice axis.
UnitImaginary parse_axis(const std::string& text);
// Parses "w,x,y,z".
Quaternion parse_quaternion(const std::string& text);

}  // namespace qspectra::io
