#include "kedge/point_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kedge/errors.hpp"

namespace kedge {

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Point> read_points(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw InputError("point file is empty");
  long long n = 0;
  {
    std::istringstream head(lines[0]);
    std::string extra;
    if (!(head >> n) || n < 0 || (head >> extra)) throw InputError("bad point count line '" + lines[0] + "'");
  }
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw InputError("point file declares " + std::to_string(n) + " points but has " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Point> pts;
  pts.reserve(n);
  for (long long i = 1; i <= n; ++i) {
    std::istringstream row(lines[i]);
    std::string xs, ys, label, extra;
    if (!(row >> xs >> ys)) throw InputError("bad point line '" + lines[i] + "'");
    row >> label;
    if (row >> extra) throw InputError("trailing tokens in point line '" + lines[i] + "'");
    pts.emplace_back(parse_rational(xs), parse_rational(ys), label);
  }
  return pts;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_points(in);
}

void write_points(std::ostream& out, const std::vector<Point>& points, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << points.size() << '\n';
  for (const auto& p : points) {
    out << to_string(p.x) << ' ' << to_string(p.y);
    if (!p.label.empty()) out << ' ' << p.label;
    out << '\n';
  }
}

void write_points_file(const std::string& path, const std::vector<Point>& points,
                       const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_points(out, points, comment);
}

}  // namespace kedge
