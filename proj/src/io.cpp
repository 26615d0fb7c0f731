#include "qspectra/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qspectra::io {

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4 || !j[0].is_number())
    throw Error(Errc::parse_error, "quaternion must be a 4-array [w,x,y,z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

json to_json(const QMatrix& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) row.push_back(to_json(t(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", t.dim()}, {"entries", std::move(rows)}};
}

QMatrix qmatrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw Error(Errc::parse_error, "matrix object needs fields n and entries");
  const auto n = j["n"].get<std::size_t>();
  const json& rows = j["entries"];
  if (!rows.is_array() || rows.size() != n)
    throw Error(Errc::parse_error, "entries must hold n rows");
  QMatrix t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw Error(Errc::parse_error, "row length must equal n");
    for (std::size_t k = 0; k < n; ++k)
      t(i, k) = quaternion_from_json(rows[i][k]);
  }
  return t;
}

json to_json(const SSpectrum& s) {
  json out = json::array();
  for (const auto& sphere : s.spheres)
    out.push_back(json{{"x", sphere.x},
                       {"y", sphere.y},
                       {"modulus", sphere.modulus()}});
  return out;
}

json to_json(const PowerReport& r) {
  return json{{"norms", r.norms},
              {"p_n", r.p_n},
              {"r_s", r.r_s},
              {"classification", to_string(r.classification)},
              {"tail_slope", r.tail_slope},
              {"evidence", r.evidence}};
}

namespace {

json grid_to_json(const ScanGrid& g) {
  json axes = json::array();
  for (const auto& a : g.axes) axes.push_back(to_json(a.value()));
  return json{{"radii", g.radii},
              {"angles", g.angles},
              {"axes", std::move(axes)},
              {"n_max", g.n_max}};
}

}  // namespace

json to_json(const KreissReport& r) {
  return json{{"grid", grid_to_json(r.grid)},
              {"c_est", r.c_est},
              {"witness",
               json{{"radius", r.witness.radius},
                    {"angle", r.witness.angle},
                    {"axis_idx", r.witness.axis_idx},
                    {"value", r.witness.value}}}};
}

json to_json(const KTReport& r) {
  return json{{"d", r.d},
              {"peripheral", to_json(r.peripheral)},
              {"lower_bounds", r.lower_bounds},
              {"lower_bound_max", r.lower_bound_max},
              {"applicable", r.applicable},
              {"spectral_predicts_convergence",
               r.spectral_predicts_convergence},
              {"verdict", to_string(r.verdict)}};
}

json to_json(const RittReport& r) {
  return json{{"alpha", r.alpha},
              {"grid", grid_to_json(r.grid)},
              {"c_est", r.c_est},
              {"per_radius_max", r.per_radius_max},
              {"gamma_in_one", r.gamma_in_one},
              {"table_diverges", r.table_diverges},
              {"hypothesis_met", r.hypothesis_met},
              {"conclusion_observed", r.conclusion_observed}};
}

json to_json(const YosidaScanReport& r) {
  const char* verdict = r.verdict == ScanVerdict::satisfies  ? "satisfies"
                        : r.verdict == ScanVerdict::violates ? "violates"
                                                             : "inconclusive";
  return json{{"grid", grid_to_json(r.grid)},
              {"c_target", r.c_target},
              {"worst_ratio", r.worst_ratio},
              {"per_radius_worst", r.per_radius_worst},
              {"verdict", verdict},
              {"witness",
               json{{"radius", r.witness.radius},
                    {"angle", r.witness.angle},
                    {"axis_idx", r.witness.axis_idx},
                    {"side", to_string(r.witness.side)},
                    {"n", r.witness.n},
                    {"value", r.witness.value}}}};
}

json to_json(const GelfandRigidityReport& r) {
  return json{{"sup_norm", r.sup_norm},
              {"powers_bounded", r.powers_bounded},
              {"spectrum_is_one", r.spectrum_is_one},
              {"dist_identity", r.dist_identity},
              {"spectrum", to_json(r.spectrum)}};
}

json to_json(const SpectralMappingReport& r) {
  return json{{"spectrum_of_ft", to_json(r.spectrum_of_ft)},
              {"image_spectrum", to_json(r.image_spectrum)},
              {"hausdorff", r.hausdorff}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string axis_label(const UnitImaginary& axis) {
  const Quaternion& q = axis.value();
  return format_double(q.x) + ":" + format_double(q.y) + ":" +
         format_double(q.z);
}

std::string sequence_csv(const std::vector<double>& values,
                         const std::string& value_header, int first_n) {
  std::ostringstream out;
  out << "n," << value_header << "\n";
  for (std::size_t k = 0; k < values.size(); ++k)
    out << (first_n + static_cast<int>(k)) << "," << format_double(values[k])
        << "\n";
  return out.str();
}

std::string yosida_csv(const YosidaScanReport& r) {
  std::ostringstream out;
  out << "radius,angle,axis,side,n,value\n";
  for (const auto& e : r.entries)
    out << format_double(e.radius) << "," << format_double(e.angle) << ","
        << axis_label(r.grid.axes[e.axis_idx]) << "," << to_string(e.side)
        << "," << e.n << "," << format_double(e.value) << "\n";
  return out.str();
}

std::string kreiss_csv(const KreissReport& r) {
  std::ostringstream out;
  out << "radius,angle,axis,value\n";
  for (const auto& e : r.entries)
    out << format_double(e.radius) << "," << format_double(e.angle) << ","
        << axis_label(r.grid.axes[e.axis_idx]) << "," << format_double(e.value)
        << "\n";
  return out.str();
}

std::string ritt_csv(const RittReport& r) {
  std::ostringstream out;
  out << "radius,angle,axis,value\n";
  for (const auto& e : r.entries)
    out << format_double(e.radius) << "," << format_double(e.angle) << ","
        << axis_label(r.grid.axes[e.axis_idx]) << "," << format_double(e.value)
        << "\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path);
  out << content;
}

QMatrix load_matrix(const std::string& path) {
  json j = json::parse(read_text_file(path), nullptr, false);
  if (j.is_discarded())
    throw Error(Errc::parse_error, "invalid JSON in " + path);
  return qmatrix_from_json(j);
}

void save_matrix(const std::string& path, const QMatrix& t) {
  write_text_file(path, to_json(t).dump(2) + "\n");
}

namespace {

std::vector<double> parse_csv_doubles(const std::string& text,
                                      std::size_t expected) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    try {
      out.push_back(std::stod(text.substr(pos, comma - pos)));
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, "bad number list: " + text);
    }
    pos = comma + 1;
  }
  if (out.size() != expected)
    throw Error(Errc::parse_error, "expected " + std::to_string(expected) +
                                       " comma-separated values: " + text);
  return out;
}

}  // namespace

UnitImaginary parse_axis(const std::string& text) {
  const auto v = parse_csv_doubles(text, 3);
  return UnitImaginary(v[0], v[1], v[2]);
}

Quaternion parse_quaternion(const std::string& text) {
  const auto v = parse_csv_doubles(text, 4);
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace qspectra::io
