#pragma once

#include <optional>
#include <string>

#include "kolan/model.hpp"

namespace kolan {

// Exact header the profiles CSV must carry, in this column order.
extern const char* const kProfilesCsvHeader;

// Loads and validates a dataset. corpora_path may be absent (metrics/pca-only
// runs). Row numbers are 1-based and include the header line, so error
// messages point at the file as an editor shows it.
Dataset load_dataset(const std::string& profiles_path,
                     const std::optional<std::string>& corpora_path = std::nullopt);

Dataset parse_dataset(const std::string& profiles_csv,
                      const std::optional<std::string>& corpora_json = std::nullopt);

std::string serialize_profiles_csv(const Dataset& ds);
std::string serialize_corpora_json(const Dataset& ds);

std::string read_file(const std::string& path);         // throws IoError
void write_file(const std::string& path, const std::string& content);

}  // namespace kolan
