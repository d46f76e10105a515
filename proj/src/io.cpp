#include "rieszlab/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rieszlab {

namespace {
constexpr const char* kMagic = "# rieszlab-points";
constexpr double kLoadResidualTol = 1e-8;
}  // namespace

void save_points(const Configuration& omega, const std::string& path,
                 const std::optional<KernelSpec>& kernel) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << kMagic << " set=" << omega.set.name()
      << " kernel=" << (kernel ? kernel->name() : std::string("none"))
      << " provenance=" << provenance_name(omega.provenance) << " seed=" << omega.seed
      << " n=" << omega.points.size() << "\n";
  const int dim = omega.set.ambient_dim;
  for (int d = 0; d < dim; ++d) out << (d ? "," : "") << "x" << d;
  out << "\n";
  char buf[64];
  for (const Point& p : omega.points) {
    for (int d = 0; d < dim; ++d) {
      std::snprintf(buf, sizeof(buf), "%.17g", p[d]);
      out << (d ? "," : "") << buf;
    }
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

}  // namespace

PointsFile load_points(const std::string& path,
                       const std::optional<CompactSetSpec>& fallback_set) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);

  PointsFile out;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty points file: " + path);

  bool have_set = false;
  if (line.rfind(kMagic, 0) == 0) {
    for (const std::string& tok : split(line, ' ')) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "set") {
        out.config.set = CompactSetSpec::from_name(val);
        have_set = true;
      } else if (key == "kernel" && val != "none") {
        out.kernel = KernelSpec::from_name(val);
      } else if (key == "provenance") {
        out.config.provenance = provenance_from_name(val);
      } else if (key == "seed") {
        out.config.seed = std::stoull(val);
      }
    }
    if (!std::getline(in, line)) throw std::runtime_error("missing column header: " + path);
  } else {
    // Legacy file without metadata: Explicit provenance, set supplied by the caller.
    out.config.provenance = Provenance::Explicit;
  }
  if (!have_set) {
    if (!fallback_set) throw std::runtime_error("points file has no set and none was given");
    out.config.set = *fallback_set;
  }

  const int dim = out.config.set.ambient_dim;
  // `line` currently holds the column header (or, in a headerless legacy
  // file, possibly the first data row).
  const bool header_is_data = !line.empty() && (std::isdigit(line[0]) || line[0] == '-');
  auto parse_row = [&](const std::string& row) {
    const auto cells = split(row, ',');
    if (static_cast<int>(cells.size()) != dim)
      throw std::runtime_error("dimension mismatch in points file: " + path);
    Point p;
    for (int d = 0; d < dim; ++d) {
      try {
        std::size_t used = 0;
        p[d] = std::stod(cells[static_cast<std::size_t>(d)], &used);
        if (used != cells[static_cast<std::size_t>(d)].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::runtime_error("malformed number in points file: " + path);
      }
    }
    out.config.points.push_back(p);
  };
  if (header_is_data) parse_row(line);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    parse_row(line);
  }
  if (out.config.points.empty()) throw std::runtime_error("no points in file: " + path);

  for (const Point& p : out.config.points) {
    if (!p.all_finite()) throw std::runtime_error("non-finite point in file: " + path);
    if (membership_residual(out.config.set, p) > kLoadResidualTol)
      throw std::runtime_error("point off the set (residual > 1e-8): " + path);
  }
  return out;
}

}  // namespace rieszlab
