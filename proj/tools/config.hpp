#pragma once

// Experiment configuration: a sectioned key = value text format with strict
// parsing -- unknown sections or keys are rejected so that a typo in a
// tolerance name cannot silently fake a pass.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "segray/domain.hpp"
#include "segray/profile.hpp"
#include "segray/quadrature.hpp"
#include "segray/scalar_field.hpp"
#include "segray/tensor_field.hpp"

namespace segray::cli {

struct ConfigFile {
  // section -> ordered (key, value) pairs; duplicate keys allowed (lists).
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections;
  std::string raw;

  static ConfigFile parse_text(const std::string& text);
  static ConfigFile parse_file(const std::string& path);
};

// Typed accessors that track key consumption; finish() rejects leftovers.
class ConfigCursor {
public:
  explicit ConfigCursor(const ConfigFile& file) : file_(file) {}

  bool has(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         std::optional<std::string> def = std::nullopt);
  double get_double(const std::string& section, const std::string& key,
                    std::optional<double> def = std::nullopt);
  int get_int(const std::string& section, const std::string& key,
              std::optional<int> def = std::nullopt);
  bool get_bool(const std::string& section, const std::string& key, bool def);
  std::vector<double> get_double_list(const std::string& section,
                                      const std::string& key,
                                      std::optional<std::vector<double>> def =
                                          std::nullopt);
  // All values of a repeatable key, in file order.
  std::vector<std::string> get_all(const std::string& section,
                                   const std::string& key);

  void finish() const;  // throws ConfigInvalid listing unconsumed keys

private:
  const std::string* find(const std::string& section,
                          const std::string& key) const;
  const ConfigFile& file_;
  mutable std::set<std::pair<std::string, std::size_t>> consumed_;
};

// Shared factories for config-described objects.
std::shared_ptr<ConvexDomain> domain_from_config(ConfigCursor& c);
TensorFieldPtr tensor_from_config(ConfigCursor& c);
ScalarFieldPtr potential_from_config(ConfigCursor& c, int dim);
QuadratureRule quadrature_from_config(ConfigCursor& c);
ProfilePtr profile_from_config(ConfigCursor& c);  // [profile] analytic kinds
Potential1D qbar_from_config(ConfigCursor& c);    // [model] qbar entry

} // namespace segray::cli
