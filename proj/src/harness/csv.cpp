#include "metaprox/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "metaprox/errors.hpp"

namespace metaprox::harness {
namespace {

std::string fixed6(double v) {
  char buf[64];
  const int n = std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf, static_cast<std::size_t>(n));
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(',', pos);
    out.push_back(line.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

double to_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("csv: bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::string> coordinate_columns(std::size_t dim) {
  if (dim == 1) return {"x"};
  if (dim == 2) return {"x", "y"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= dim; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::string emit_csv(const std::vector<Row>& rows, std::size_t dim) {
  std::string out = "step";
  for (const auto& c : coordinate_columns(dim)) out += "," + c;
  out += ",dist_to_limit\n";
  for (const auto& row : rows) {
    if (row.coords.size() != dim) throw std::invalid_argument("row dimension does not match the header");
    out += std::to_string(row.step);
    for (double c : row.coords) out += "," + fixed6(c);
    out += "," + fixed6(row.dist_to_limit) + "\n";
  }
  return out;
}

std::vector<Row> parse_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    lines.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  if (lines.empty()) throw ConfigError("csv: missing header");
  const auto header = fields(lines.front());
  if (header.size() < 3 || header.front() != "step" || header.back() != "dist_to_limit") {
    throw ConfigError("csv: unexpected header '" + std::string(lines.front()) + "'");
  }
  const std::size_t dim = header.size() - 2;
  const auto expected = coordinate_columns(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (header[i + 1] != expected[i]) throw ConfigError("csv: unexpected column '" + std::string(header[i + 1]) + "'");
  }

  std::vector<Row> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = fields(lines[i]);
    if (f.size() != header.size()) throw ConfigError("csv: wrong field count on line " + std::to_string(i + 1));
    Row row;
    std::size_t step = 0;
    auto [ptr, ec] = std::from_chars(f[0].data(), f[0].data() + f[0].size(), step);
    if (ec != std::errc() || ptr != f[0].data() + f[0].size()) throw ConfigError("csv: bad step number");
    row.step = step;
    for (std::size_t k = 0; k < dim; ++k) row.coords.push_back(to_double(f[k + 1]));
    row.dist_to_limit = to_double(f.back());
    rows.push_back(std::move(row));
  }
  return rows;
}

Row rounded(const Row& row) {
  auto r6 = [](double v) { return to_double(fixed6(v)); };
  Row out = row;
  for (double& c : out.coords) c = r6(c);
  out.dist_to_limit = r6(out.dist_to_limit);
  return out;
}

}  // namespace metaprox::harness
