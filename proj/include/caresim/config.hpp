#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "caresim/replication.hpp"

namespace caresim {

// Raised for unreadable, unparsable or schema-invalid configuration. The
// message carries the file/line (parse errors) or the field path (schema
// errors).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Experiment {
  Scenario scenario;
  std::vector<double> real_band_counts;
};

// Parses a configuration document. Every section is optional; omitted fields
// fall back to the built-in model, so an empty document reproduces the
// default scenario exactly.
Experiment parse_experiment(const std::string& json_text,
                            const std::string& source_name = "<config>");

Experiment load_experiment(const std::string& path);

Experiment default_experiment();

// The defaults-merged configuration as a JSON document. Feeding this back
// through parse_experiment yields the same experiment.
std::string effective_config_json(const Experiment& experiment);

}  // namespace caresim
