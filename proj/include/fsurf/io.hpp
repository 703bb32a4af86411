#ifndef FSURF_IO_HPP
#define FSURF_IO_HPP

#include "fsurf/fourier_surface.hpp"
#include "fsurf/oracles.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsurf {

/// {"M": int, "N": int, "T": real, "L": real, "coeffs": [[a00, a01, ...], ...]}
inline nlohmann::json grid_to_json(const CoefficientGrid& grid) {
  nlohmann::json rows = nlohmann::json::array();
  for (int m = 0; m <= grid.M(); ++m) {
    nlohmann::json row = nlohmann::json::array();
    for (int n = 0; n <= grid.N(); ++n) row.push_back(grid(m, n));
    rows.push_back(std::move(row));
  }
  return {{"M", grid.M()}, {"N", grid.N()}, {"T", grid.horizon()}, {"L", grid.domain_length()},
          {"coeffs", std::move(rows)}};
}

inline CoefficientGrid grid_from_json(const nlohmann::json& j) {
  const int M = j.at("M").get<int>();
  const int N = j.at("N").get<int>();
  const auto& rows = j.at("coeffs");
  if (M < 0 || N < 0 || !rows.is_array() || rows.size() != static_cast<std::size_t>(M + 1))
    throw std::invalid_argument("grid json: coeffs must have M + 1 rows");
  Matrix coeffs(M + 1, N + 1);
  for (int m = 0; m <= M; ++m) {
    const auto& row = rows[static_cast<std::size_t>(m)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(N + 1))
      throw std::invalid_argument("grid json: each coeffs row must have N + 1 entries");
    for (int n = 0; n <= N; ++n) coeffs(m, n) = row[static_cast<std::size_t>(n)].get<double>();
  }
  return {std::move(coeffs), j.at("T").get<double>(), j.at("L").get<double>()};
}

/// CSV with header `t,x0,u,x`, one row per lattice point, t-major, 17
/// significant digits so values survive the round trip bit-exactly.
inline void write_surface_csv(std::ostream& os, const Surface& control, const Surface& state) {
  if (control.times != state.times || control.x0s != state.x0s)
    throw std::invalid_argument("write_surface_csv: control and state lattices differ");
  os << "t,x0,u,x\n" << std::setprecision(17);
  for (std::size_t i = 0; i < control.times.size(); ++i)
    for (std::size_t j = 0; j < control.x0s.size(); ++j) {
      const auto r = static_cast<Eigen::Index>(i);
      const auto c = static_cast<Eigen::Index>(j);
      os << control.times[i] << ',' << control.x0s[j] << ',' << control.values(r, c) << ','
         << state.values(r, c) << '\n';
    }
}

/// Inverse of write_surface_csv: (control, state).
inline std::pair<Surface, Surface> read_surface_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "t,x0,u,x")
    throw std::invalid_argument("surface csv: expected header 't,x0,u,x'");
  struct Row { double t, x0, u, x; };
  std::vector<Row> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    Row r{};
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(ss >> r.t >> c1 >> r.x0 >> c2 >> r.u >> c3 >> r.x) || c1 != ',' || c2 != ',' || c3 != ',')
      throw std::invalid_argument("surface csv: malformed row '" + line + "'");
    rows.push_back(r);
  }
  Surface control;
  for (const auto& r : rows) {
    if (control.times.empty() || control.times.back() != r.t) control.times.push_back(r.t);
    if (control.times.size() == 1) control.x0s.push_back(r.x0);
  }
  const auto nt = control.times.size();
  const auto nx = control.x0s.size();
  if (nt * nx != rows.size()) throw std::invalid_argument("surface csv: rows do not form a lattice");
  control.values.resize(static_cast<Eigen::Index>(nt), static_cast<Eigen::Index>(nx));
  Surface state = control;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k / nx);
    const auto j = static_cast<Eigen::Index>(k % nx);
    if (rows[k].x0 != control.x0s[k % nx])
      throw std::invalid_argument("surface csv: rows do not form a lattice");
    control.values(i, j) = rows[k].u;
    state.values(i, j) = rows[k].x;
  }
  return {std::move(control), std::move(state)};
}

}  // namespace fsurf

namespace nlohmann {
template <>
struct adl_serializer<fsurf::CoefficientGrid> {
  static fsurf::CoefficientGrid from_json(const json& j) { return fsurf::grid_from_json(j); }
  static void to_json(json& j, const fsurf::CoefficientGrid& g) { j = fsurf::grid_to_json(g); }
};
}  // namespace nlohmann

#endif  // FSURF_IO_HPP
