#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kedge/geometry.hpp"

namespace kedge {

/// Reads the point file format: '#' comment lines, a count n, then n lines
/// "x y [label]" with integer or p/q coordinates. Throws InputError.
std::vector<Point> read_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

/// Writes canonical rationals; labels are appended when present.
void write_points(std::ostream& out, const std::vector<Point>& points,
                  const std::string& comment = {});
void write_points_file(const std::string& path, const std::vector<Point>& points,
                       const std::string& comment = {});

/// Splits text into non-comment, non-blank lines (trimmed).
std::vector<std::string> content_lines(std::istream& in);

}  // namespace kedge
