#pragma once

// Iteration tables: header line, then one row per step, six fractional
// digits, LF line endings. Half-plane and planar runs use
// step,x,y,dist_to_limit; a line uses step,x,dist_to_limit and higher
// dimensions step,x1,...,xd,dist_to_limit.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace metaprox::harness {

struct Row {
  std::size_t step = 0;
  std::vector<double> coords;
  double dist_to_limit = 0.0;

  friend bool operator==(const Row&, const Row&) = default;
};

std::vector<std::string> coordinate_columns(std::size_t dim);

std::string emit_csv(const std::vector<Row>& rows, std::size_t dim);

/// Throws ConfigError on a malformed document.
std::vector<Row> parse_csv(std::string_view text);

/// Rounds every value to the six decimals the CSV carries.
Row rounded(const Row& row);

}  // namespace metaprox::harness
