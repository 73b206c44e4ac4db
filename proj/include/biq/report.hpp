#pragma once

// Serialization: JSON round-trips for the core result types, the markdown
// summary tables, the curvature summary, and the full reproduction bundle.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "biq/cohomology.hpp"
#include "biq/curvature.hpp"
#include "biq/freeness.hpp"

namespace biq {

using Json = nlohmann::ordered_json;

std::string rat_string(const Rat& r);  // "p" or "p/q"
Rat rat_from_string(const std::string& s);
std::string double_string(double v);  // %.17g

// Degree-2 ("a z^2 + b w^2") or degree-4 ("a z^4 + c z^2w^2 + b w^4")
// rendering with UTF-8 generators.
std::string poly2_string(const EvenPoly& p);
std::string poly4_string(const EvenPoly& p);

Json spec_json(const BiquotientSpec& s);
BiquotientSpec spec_from_json(const Json& j);

Json verdict_json(const FreenessVerdict& v);
FreenessVerdict verdict_from_json(const Json& j);

Json cohomology_json(const CohomologyReport& r);
CohomologyReport cohomology_from_json(const Json& j);

Json scan_row_json(const ScanRow& r);
ScanRow scan_row_from_json(const Json& j);

Json config_json(const MetricConfig& c);
MetricConfig config_from_json(const Json& j);

// Everything the reproduction run computes, produced once and shared by the
// renderers.
struct ReproduceData {
  MetricConfig cfg;
  Classification cls;
  std::vector<Sp1Pair> pairs;
  std::vector<CohomologyReport> coh;
  std::vector<ScanRow> curvature;  // N1..N8 at theta = 0.5, then N4 at pi/2
};

ReproduceData compute_all(const MetricConfig& cfg);

// Markdown tables.
std::string embeddings_table();
std::string torus_images_table();
std::string sp1_homs_table(int hdim = 3);
std::string sp1xsp1_homs_table(int hdim = 3);
std::string sp1_pairs_table(const std::vector<Sp1Pair>& pairs);
std::string bf_h8_table(const std::vector<CohomologyReport>& reports);
std::string p1_table(const std::vector<CohomologyReport>& reports);

std::string curvature_csv(const std::vector<ScanRow>& rows);
Json curvature_summary_json(const std::vector<ScanRow>& rows, const MetricConfig& cfg);
Json bundle_json(const ReproduceData& data);

// The full reproduction file set: (filename, content) pairs in emission order.
std::vector<std::pair<std::string, std::string>> reproduce_files(const ReproduceData& data);

// Byte-compares rendered files against the copies in `golden_dir`; returns the
// names of files that differ or cannot be read.
std::vector<std::string> compare_golden(
    const std::string& golden_dir,
    const std::vector<std::pair<std::string, std::string>>& files);

}  // namespace biq
