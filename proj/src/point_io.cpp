#include "kdknn/point_io.hpp"

#include <charconv>
#include <fstream>

#include "kdknn/error.hpp"

namespace kdknn {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

DataPoint parse_point(std::string_view text) {
  DataPoint p;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = trim(text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start));
    if (field.empty()) {
      throw InputError("empty coordinate in '" + std::string(text) + "'");
    }
    Coord c = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), c);
    if (ec == std::errc::result_out_of_range) {
      throw InputError("coordinate '" + std::string(field) + "' is too large");
    }
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw InputError("coordinate '" + std::string(field) +
                       "' is not a non-negative integer");
    }
    p.push_back(c);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

std::vector<DataPoint> read_points(std::istream& in, std::size_t dims,
                                   const std::string& source) {
  std::vector<DataPoint> points;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    DataPoint p;
    try {
      p = parse_point(body);
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    if (p.size() != dims) {
      throw InputError(where + "expected " + std::to_string(dims) +
                       " coordinates, found " + std::to_string(p.size()));
    }
    points.push_back(std::move(p));
  }
  if (in.bad()) throw InputError(source + ": read error");
  return points;
}

std::vector<DataPoint> read_point_file(const std::string& path,
                                       std::size_t dims) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_points(in, dims, path);
}

std::string format_point(const DataPoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

void write_points(std::ostream& out, const std::vector<DataPoint>& points) {
  for (const auto& p : points) out << format_point(p) << '\n';
}

}  // namespace kdknn
