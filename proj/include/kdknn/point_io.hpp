#pragma once

// PointFile: one point per line as comma-separated non-negative decimal
// integers. Lines starting with '#' and blank lines are ignored.

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kdknn/metrics.hpp"

namespace kdknn {

/// Parses "c0,c1,...". Throws InputError.
DataPoint parse_point(std::string_view text);

/// Reads every point; each must have `dims` coordinates. Errors name the
/// source and the 1-based line number. Throws InputError.
std::vector<DataPoint> read_points(std::istream& in, std::size_t dims,
                                   const std::string& source = "<input>");

std::vector<DataPoint> read_point_file(const std::string& path,
                                       std::size_t dims);

std::string format_point(const DataPoint& p);

void write_points(std::ostream& out, const std::vector<DataPoint>& points);

}  // namespace kdknn
