#include "pseudoinv/scenario_file.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pseudoinv {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"algebra", {"kind", "j", "dim", "bargmann_k"}},
      {"metric", {"zeta", "theta0", "zeta_table", "theta0_table", "real_coefficients"}},
      {"drive", {"beta_re", "beta_im"}},
      {"grid", {"horizon", "steps"}},
      {"initial_state", {"indices", "weights_re", "weights_im"}},
  };
  return keys;
}

// Line number of every "section.key" so value errors can point into the file.
std::map<std::string, std::size_t> key_lines(const std::string& path) {
  std::ifstream in(path);
  std::map<std::string, std::size_t> lines;
  std::string line, section;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    boost::algorithm::trim(line);
    if (line.empty() || line[0] == ';' || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      boost::algorithm::trim(section);
      lines.emplace(section, number);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    boost::algorithm::trim(key);
    lines.emplace(section + "." + key, number);
  }
  return lines;
}

class Document {
public:
  explicit Document(const std::string& path) : path_(path), lines_(key_lines(path)) {
    try {
      pt::ini_parser::read_ini(path, tree_);
    } catch (const pt::ini_parser_error& e) {
      throw ParseError(e.message(), e.line());
    }
    for (const auto& [section, body] : tree_) {
      if (!body.data().empty()) {
        throw ParseError("entry '" + section + "' outside any section", line_of("." + section));
      }
      const auto known = allowed_keys().find(section);
      if (known == allowed_keys().end()) {
        throw ParseError("unknown section [" + section + "]", line_of(section));
      }
      for (const auto& [key, value] : body) {
        if (!known->second.count(key)) {
          throw ParseError("unknown key '" + key + "' in [" + section + "]",
                           line_of(section + "." + key));
        }
      }
    }
  }

  std::size_t line_of(const std::string& key) const {
    const auto it = lines_.find(key);
    return it == lines_.end() ? 0 : it->second;
  }

  bool has(const std::string& key) const { return tree_.get_optional<std::string>(key).has_value(); }

  std::string text(const std::string& key) const {
    const auto v = tree_.get_optional<std::string>(key);
    if (!v) throw ParseError("missing key " + key, 0);
    return boost::algorithm::trim_copy(*v);
  }

  template <class T>
  T number(const std::string& key) const {
    const std::string raw = text(key);
    std::istringstream in(raw);
    T value{};
    if (!(in >> value) || !(in >> std::ws).eof()) {
      throw ParseError("key " + key + ": '" + raw + "' is not a number", line_of(key));
    }
    return value;
  }

  template <class T>
  std::vector<T> list(const std::string& key) const {
    const std::string raw = text(key);
    std::istringstream in(raw);
    std::vector<T> out;
    T value{};
    while (in >> value) out.push_back(value);
    if (!in.eof()) {
      throw ParseError("key " + key + ": '" + raw + "' is not a list of numbers", line_of(key));
    }
    return out;
  }

  Curve curve(const std::string& key) const {
    try {
      return parse_curve(text(key));
    } catch (const PreconditionError& e) {
      throw ParseError("key " + key + ": " + e.what(), line_of(key));
    }
  }

  std::string resolve(const std::string& relative) const {
    const std::filesystem::path p(relative);
    if (p.is_absolute()) return p.string();
    return (std::filesystem::path(path_).parent_path() / p).string();
  }

private:
  std::string path_;
  std::map<std::string, std::size_t> lines_;
  pt::ptree tree_;
};

AlgebraRep load_algebra(const Document& doc, const ScenarioOverrides& overrides) {
  const std::string kind = doc.text("algebra.kind");
  try {
    if (kind == "su2") {
      const double j = overrides.j ? *overrides.j : doc.number<double>("algebra.j");
      return build_su2_rep(j);
    }
    if (kind == "su11" || kind == "boson") {
      const Eigen::Index dim =
          overrides.dim ? *overrides.dim : doc.number<Eigen::Index>("algebra.dim");
      if (kind == "boson") return build_boson_rep(dim);
      return build_su11_rep(doc.number<double>("algebra.bargmann_k"), dim);
    }
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("[algebra]: ") + e.what(), doc.line_of("algebra"));
  }
  throw ParseError("algebra kind must be su2, su11 or boson, not '" + kind + "'",
                   doc.line_of("algebra.kind"));
}

MetricPreset load_metric(const Document& doc, const TimeGrid& grid, AlgebraKind kind) {
  if (doc.has("metric.real_coefficients")) {
    const auto c = doc.list<double>("metric.real_coefficients");
    if (c.size() != 3) {
      throw ParseError("real_coefficients needs omega alpha beta",
                       doc.line_of("metric.real_coefficients"));
    }
    try {
      return real_coefficient_metric(c[0], c[1], c[2], kind);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), doc.line_of("metric.real_coefficients"));
    }
  }
  auto one = [&](const std::string& name) -> Curve {
    const std::string table = "metric." + name + "_table";
    if (doc.has(table)) {
      try {
        return Curve::Sampled{grid, read_table(doc.resolve(doc.text(table)), grid)};
      } catch (const ParseError& e) {
        throw ParseError(doc.text(table) + ": " + e.what(), doc.line_of(table));
      }
    }
    return doc.curve("metric." + name);
  };
  return {one("zeta"), one("theta0")};
}

}  // namespace

Curve parse_curve(const std::string& text) {
  std::istringstream in(text);
  std::string form;
  in >> form;
  std::vector<double> p;
  double v = 0.0;
  while (in >> v) p.push_back(v);
  if (!in.eof()) throw PreconditionError("curve parameters must be numbers: '" + text + "'");
  if (form == "constant" && p.size() == 1) return Curve::Constant{p[0]};
  if (form == "ramp" && p.size() == 2) return Curve::Ramp{p[0], p[1]};
  if (form == "sinusoid" && p.size() == 4) return Curve::Sinusoid{p[0], p[1], p[2], p[3]};
  throw PreconditionError(
      "expected 'constant v', 'ramp start slope' or 'sinusoid offset amplitude frequency "
      "phase', got '" +
      text + "'");
}

std::vector<double> read_table(const std::string& path, const TimeGrid& grid) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table", 0);
  std::string line;
  if (!std::getline(in, line) || boost::algorithm::trim_copy(line) != "t,value_re,value_im") {
    throw ParseError("table header must be t,value_re,value_im", 1);
  }
  std::vector<double> values;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    std::vector<std::string> fields;
    boost::algorithm::split(fields, line, boost::is_any_of(","));
    double t = 0.0, re = 0.0, im = 0.0;
    try {
      if (fields.size() != 3) throw std::invalid_argument("field count");
      std::size_t used = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        boost::algorithm::trim(fields[k]);
        const double x = std::stod(fields[k], &used);
        if (used != fields[k].size()) throw std::invalid_argument("trailing text");
        (k == 0 ? t : k == 1 ? re : im) = x;
      }
    } catch (const std::exception&) {
      throw ParseError("row " + std::to_string(number) + " is malformed: '" + line + "'", number);
    }
    const std::size_t i = values.size();
    if (i >= grid.size()) {
      throw ParseError("row " + std::to_string(number) + " exceeds the " +
                           std::to_string(grid.size()) + " grid samples",
                       number);
    }
    if (std::abs(t - grid[i]) > 1e-9 * std::max(1.0, std::abs(grid[i]))) {
      throw ParseError("row " + std::to_string(number) + " has t=" + fields[0] +
                           ", grid expects " + std::to_string(grid[i]),
                       number);
    }
    if (im != 0.0) {
      throw ParseError("row " + std::to_string(number) + ": metric parameters are real",
                       number);
    }
    values.push_back(re);
  }
  if (values.size() != grid.size()) {
    throw ParseError("table has " + std::to_string(values.size()) + " rows, grid has " +
                         std::to_string(grid.size()) + " samples",
                     number);
  }
  return values;
}

ScenarioSpec load_scenario_file(const std::string& path, const ScenarioOverrides& overrides) {
  if (!std::filesystem::is_regular_file(path)) {
    throw ParseError("scenario file '" + path + "' not found", 0);
  }
  const Document doc(path);

  if (doc.has("drive.beta_im")) {
    throw ParseError(
        "beta_im is not an input: the reality of the phase frequency fixes "
        "Im beta = zeta_dot / (2 theta0)",
        doc.line_of("drive.beta_im"));
  }

  const double horizon =
      overrides.horizon ? *overrides.horizon : doc.number<double>("grid.horizon");
  const std::size_t steps =
      overrides.steps ? *overrides.steps : doc.number<std::size_t>("grid.steps");
  if (!(horizon > 0.0) || steps < 16) {
    throw ParseError("[grid] needs horizon > 0 and steps >= 16", doc.line_of("grid"));
  }
  const TimeGrid grid = TimeGrid::uniform(horizon, steps);

  AlgebraRep rep = load_algebra(doc, overrides);
  const MetricPreset metric = load_metric(doc, grid, rep.kind);
  Curve beta_re;
  if (doc.has("metric.real_coefficients")) {
    if (doc.has("drive.beta_re")) {
      throw ParseError("beta_re is fixed by real_coefficients", doc.line_of("drive.beta_re"));
    }
    beta_re = Curve::Constant{doc.list<double>("metric.real_coefficients")[2]};
  } else {
    beta_re = doc.curve("drive.beta_re");
  }

  std::vector<std::pair<std::size_t, Complex>> weights;
  const auto indices = doc.list<std::size_t>("initial_state.indices");
  const auto re = doc.list<double>("initial_state.weights_re");
  const auto im = doc.has("initial_state.weights_im") ? doc.list<double>("initial_state.weights_im")
                                                      : std::vector<double>(re.size(), 0.0);
  if (indices.empty() || re.size() != indices.size() || im.size() != indices.size()) {
    throw ParseError("indices, weights_re and weights_im need equal, non-zero lengths",
                     doc.line_of("initial_state"));
  }
  for (std::size_t k = 0; k < indices.size(); ++k) weights.emplace_back(indices[k], Complex(re[k], im[k]));

  Eigen::Index block = -1;
  if (rep.kind == AlgebraKind::su11) block = std::max<Eigen::Index>(rep.dim / 2, 1);
  const std::string name = std::filesystem::path(path).stem().string();
  return build_scenario(name, std::move(rep), metric, beta_re, grid, std::move(weights), block);
}

}  // namespace pseudoinv
