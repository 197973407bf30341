#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "segray/errors.hpp"

namespace segray::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

} // namespace

ConfigFile ConfigFile::parse_text(const std::string& text) {
  ConfigFile f;
  f.raw = text;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigInvalid("line " + std::to_string(lineno) +
                            ": malformed section header");
      section = trim(t.substr(1, t.size() - 2));
      f.sections.try_emplace(section);
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigInvalid("line " + std::to_string(lineno) +
                          ": expected key = value");
    if (section.empty())
      throw ConfigInvalid("line " + std::to_string(lineno) +
                          ": key outside any [section]");
    f.sections[section].emplace_back(trim(t.substr(0, eq)),
                                     trim(t.substr(eq + 1)));
  }
  return f;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigInvalid("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

const std::string* ConfigCursor::find(const std::string& section,
                                      const std::string& key) const {
  const auto it = file_.sections.find(section);
  if (it == file_.sections.end()) return nullptr;
  for (std::size_t i = 0; i < it->second.size(); ++i) {
    if (it->second[i].first == key) {
      consumed_.insert({section, i});
      return &it->second[i].second;
    }
  }
  return nullptr;
}

bool ConfigCursor::has(const std::string& section, const std::string& key) const {
  const auto it = file_.sections.find(section);
  if (it == file_.sections.end()) return false;
  for (const auto& kv : it->second)
    if (kv.first == key) return true;
  return false;
}

std::string ConfigCursor::get_string(const std::string& section,
                                     const std::string& key,
                                     std::optional<std::string> def) {
  const std::string* v = find(section, key);
  if (v) return *v;
  if (def) return *def;
  throw ConfigInvalid("missing required key [" + section + "] " + key);
}

double ConfigCursor::get_double(const std::string& section,
                                const std::string& key,
                                std::optional<double> def) {
  const std::string* v = find(section, key);
  if (!v) {
    if (def) return *def;
    throw ConfigInvalid("missing required key [" + section + "] " + key);
  }
  char* end = nullptr;
  const double x = std::strtod(v->c_str(), &end);
  if (end == v->c_str() || *end != '\0')
    throw ConfigInvalid("[" + section + "] " + key + ": not a number: " + *v);
  return x;
}

int ConfigCursor::get_int(const std::string& section, const std::string& key,
                          std::optional<int> def) {
  const std::string* v = find(section, key);
  if (!v) {
    if (def) return *def;
    throw ConfigInvalid("missing required key [" + section + "] " + key);
  }
  char* end = nullptr;
  const long x = std::strtol(v->c_str(), &end, 10);
  if (end == v->c_str() || *end != '\0')
    throw ConfigInvalid("[" + section + "] " + key + ": not an integer: " + *v);
  return static_cast<int>(x);
}

bool ConfigCursor::get_bool(const std::string& section, const std::string& key,
                            bool def) {
  const std::string* v = find(section, key);
  if (!v) return def;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw ConfigInvalid("[" + section + "] " + key + ": not a boolean: " + *v);
}

std::vector<double> ConfigCursor::get_double_list(
    const std::string& section, const std::string& key,
    std::optional<std::vector<double>> def) {
  const std::string* v = find(section, key);
  if (!v) {
    if (def) return *def;
    throw ConfigInvalid("missing required key [" + section + "] " + key);
  }
  std::vector<double> out;
  std::istringstream ss(*v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const std::string t = trim(item);
    const double x = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0')
      throw ConfigInvalid("[" + section + "] " + key + ": bad list entry: " + t);
    out.push_back(x);
  }
  return out;
}

std::vector<std::string> ConfigCursor::get_all(const std::string& section,
                                               const std::string& key) {
  std::vector<std::string> out;
  const auto it = file_.sections.find(section);
  if (it == file_.sections.end()) return out;
  for (std::size_t i = 0; i < it->second.size(); ++i) {
    if (it->second[i].first == key) {
      consumed_.insert({section, i});
      out.push_back(it->second[i].second);
    }
  }
  return out;
}

void ConfigCursor::finish() const {
  for (const auto& [section, entries] : file_.sections) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (!consumed_.count({section, i}))
        throw ConfigInvalid("unknown key [" + section + "] " +
                            entries[i].first);
    }
  }
}

// ------------------------------------------------------------- factories

std::shared_ptr<ConvexDomain> domain_from_config(ConfigCursor& c) {
  const std::string kind = c.get_string("domain", "kind", "disc");
  if (kind == "disc") {
    const double radius = c.get_double("domain", "radius", 1.0);
    return std::make_shared<ConvexDomain>(make_disc(radius));
  }
  if (kind == "ellipse") {
    const auto axes = c.get_double_list("domain", "semi_axes");
    return std::make_shared<ConvexDomain>(make_ellipse(axes));
  }
  if (kind == "quartic") {
    const auto coeffs =
        c.get_double_list("domain", "coeffs", std::vector<double>{1.0, 1.0});
    return std::make_shared<ConvexDomain>(make_quartic(coeffs));
  }
  throw UnknownKind("[domain] kind: " + kind);
}

namespace {

std::vector<PolyTerm> parse_poly_terms(const std::vector<std::string>& lines,
                                       int dim) {
  // term = coeff e1 e2 [e3]
  std::vector<PolyTerm> terms;
  for (const auto& line : lines) {
    std::istringstream ss(line);
    PolyTerm t;
    ss >> t.coeff;
    for (int i = 0; i < dim; ++i) {
      int e = 0;
      ss >> e;
      t.exp[i] = e;
    }
    if (ss.fail())
      throw ConfigInvalid("bad polynomial term (want: coeff e1 e2 [e3]): " + line);
    terms.push_back(t);
  }
  return terms;
}

ScalarFieldPtr scalar_from_section(ConfigCursor& c, const std::string& section,
                                   int dim) {
  const std::string fn = c.get_string(section, "fn", "poly");
  if (fn == "poly")
    return make_polynomial(dim, parse_poly_terms(c.get_all(section, "term"), dim));
  if (fn == "planewave") {
    const auto k = c.get_double_list(section, "wavevector");
    Vec kv = Vec::zero(dim);
    for (int i = 0; i < dim && i < static_cast<int>(k.size()); ++i) kv[i] = k[i];
    return make_plane_wave(kv, c.get_double(section, "amplitude", 1.0),
                           c.get_double(section, "phase", 0.0));
  }
  if (fn == "logcos")
    return std::make_shared<LogCosField>(dim, c.get_double(section, "a", 1.0));
  throw UnknownKind("[" + section + "] fn: " + fn);
}

} // namespace

TensorFieldPtr tensor_from_config(ConfigCursor& c) {
  const int dim = c.get_int("tensor", "dim", 2);
  const std::string kind = c.get_string("tensor", "kind", "constant");
  if (kind == "constant") {
    SymMat m = SymMat::identity(dim);
    if (c.has("tensor", "entries")) {
      const auto e = c.get_double_list("tensor", "entries");
      std::size_t idx = 0;
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
          if (idx < e.size()) m.set_sym(i, j, e[idx]);
          ++idx;
        }
    }
    return make_constant_tensor(m);
  }
  if (kind == "conformal") return make_conformal_tensor(scalar_from_section(c, "tensor", dim));
  if (kind == "hessian") return make_hessian_tensor(scalar_from_section(c, "tensor", dim));
  throw UnknownKind("[tensor] kind: " + kind);
}

ScalarFieldPtr potential_from_config(ConfigCursor& c, int dim) {
  const std::string kind = c.get_string("potential", "kind", "zero");
  if (kind == "zero") return make_zero_field(dim);
  if (kind == "constant")
    return make_constant_field(dim, c.get_double("potential", "value"));
  if (kind == "poly")
    return make_polynomial(dim, parse_poly_terms(c.get_all("potential", "term"), dim));
  throw UnknownKind("[potential] kind: " + kind);
}

QuadratureRule quadrature_from_config(ConfigCursor& c) {
  QuadratureRule r;
  r.panels = c.get_int("quadrature", "panels", r.panels);
  r.nodes_per_panel = c.get_int("quadrature", "nodes", r.nodes_per_panel);
  r.adaptive = c.get_bool("quadrature", "adaptive", r.adaptive);
  r.refine_tol = c.get_double("quadrature", "refine_tol", r.refine_tol);
  r.graded_endpoints = c.get_bool("quadrature", "graded", r.graded_endpoints);
  r.grade_levels = c.get_int("quadrature", "grade_levels", r.grade_levels);
  return r;
}

ProfilePtr profile_from_config(ConfigCursor& c) {
  const std::string kind = c.get_string("profile", "kind", "poly");
  const double d = c.get_double("profile", "d", 2.0);  // domain diameter
  if (kind == "poly") {
    const auto coeffs = c.get_double_list("profile", "coeffs");
    return make_polynomial_profile(coeffs, 0.5 * d);
  }
  if (kind == "model") {
    Potential1D qbar = qbar_from_config(c);
    const int nodes = c.get_int("model", "nodes", 2001);
    const auto sol = solve_1d_model_eigen(qbar, 0.5 * d, nodes);
    return make_eigen_model_profile(sol);
  }
  throw UnknownKind("[profile] kind: " + kind);
}

Potential1D qbar_from_config(ConfigCursor& c) {
  const std::string kind = c.get_string("model", "qbar", "zero");
  if (kind == "zero") return make_zero_potential1d();
  if (kind == "quadratic")
    return make_quadratic_potential1d(c.get_double("model", "qbar_a", 1.0));
  throw UnknownKind("[model] qbar: " + kind);
}

} // namespace segray::cli
