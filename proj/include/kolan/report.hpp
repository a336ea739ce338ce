#pragma once

#include <nlohmann/json.hpp>

#include "kolan/config.hpp"
#include "kolan/model.hpp"

namespace kolan::report {

// Each section writes its files under <out>/<section>/ and returns the
// JSON fragment that cmd_report folds into report.json. Identical inputs
// and config give byte-identical outputs.
nlohmann::json metrics_section(const Dataset& ds, const RunConfig& cfg);
nlohmann::json pca_section(const Dataset& ds, const RunConfig& cfg);
nlohmann::json sentiment_section(const Dataset& ds, const RunConfig& cfg);

void cmd_metrics(const RunConfig& cfg);
void cmd_pca(const RunConfig& cfg);
void cmd_sentiment(const RunConfig& cfg);
void cmd_report(const RunConfig& cfg);

}  // namespace kolan::report
