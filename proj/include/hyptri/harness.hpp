#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyptri/centers.hpp"

namespace hyptri {

enum class Shape { Any, Acute, Isosceles, Equilateral, Right };

Shape parse_shape(const std::string& s);
const char* to_string(Shape s);

struct GenConstraints {
  double max_radius = 0.95;  // Klein radius of every vertex
  double min_angle = 0.05;
  double min_side = 0.05;
  double min_side_difference = 0.0;  // pairwise |a-b| lower bound, scalene draws only
  Shape shape = Shape::Any;
};

inline constexpr int kMaxAttempts = 10000;

// Deterministic per (seed, constraints). Equilateral triangles are centered
// at the origin; isosceles and right ones are built at the origin and moved
// by a random isometry; the rest are rejection-sampled in the Klein disk.
TriangleData gen_triangle(std::uint64_t seed, const GenConstraints& c = {});

enum class Status { Pass, Fail, Skipped };
const char* to_string(Status s);

struct IdentityRecord {
  std::uint64_t seed = 0;
  std::string id;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  Status status = Status::Pass;
  std::string reason;  // always set for skips; error text for failed evaluations
};

struct IdentitySpec {
  std::string id;
  std::string anchor;
  double tolerance;
};

// Every identity in evaluation order.
const std::vector<IdentitySpec>& registry();
std::vector<std::string> registry_ids();

// `seed` drives the auxiliary random draws (test points, random lines) and
// is independent of how the triangle was obtained.
IdentityRecord run_identity(const std::string& id, const TriangleData& t, std::uint64_t seed = 0);

struct CenterEntry {
  std::string name;
  std::optional<CenterResult> result;
  std::string error;
};

// Names: M O O_A O_B O_C I I_A I_B I_C H K L S Z F.
std::vector<std::string> center_names();
std::vector<CenterEntry> center_table(const TriangleData& t, const std::vector<std::string>& which);

struct TrialReport {
  std::uint64_t seed = 0;
  TriangleData triangle;
  std::vector<IdentityRecord> records;
  std::vector<CenterEntry> centers;
};

struct SuiteOptions {
  std::vector<std::string> ids;  // empty means the whole registry
  bool fail_fast = false;
  bool with_centers = false;
};

TrialReport run_suite(const TriangleData& t, std::uint64_t seed, const SuiteOptions& opt = {});

// Seeds first..last inclusive on `jobs` worker threads; the result is ordered
// by seed. With fail_fast, reports after the first failing seed are dropped.
std::vector<TrialReport> run_seeds(std::uint64_t first, std::uint64_t last, const SuiteOptions& opt, int jobs,
                                   const GenConstraints& gen = {});

struct Summary {
  std::size_t trials = 0, pass = 0, fail = 0, skipped = 0;
  std::vector<std::string> failed;  // "seed:id"
};
Summary summarize(const std::vector<TrialReport>& reports);

void to_json(nlohmann::json& j, const IdentityRecord& r);
void to_json(nlohmann::json& j, const CenterEntry& e);
void to_json(nlohmann::json& j, const Summary& s);

// JSON-lines: one record per line, then the summary object.
std::string report_lines(const std::vector<TrialReport>& reports);

nlohmann::json triangle_to_json(const TriangleData& t, std::uint64_t seed, Model model = Model::Klein);
struct LoadedTriangle {
  TriangleData triangle;
  std::uint64_t seed = 0;
};
LoadedTriangle triangle_from_json(const nlohmann::json& j);
LoadedTriangle read_triangle(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace hyptri
