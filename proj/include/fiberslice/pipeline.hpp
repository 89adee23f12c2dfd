#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiberslice/layer_field.hpp"
#include "fiberslice/metrics.hpp"
#include "fiberslice/stress.hpp"
#include "fiberslice/toolpath.hpp"

namespace fiberslice {

struct Loading {
  Vec3 traction = Vec3::Zero();  // MPa, applied on boundary faces inside the load region
  Material material;
};

struct PipelineConfig {
  std::filesystem::path node_path;
  std::filesystem::path ele_path;
  std::vector<Selector> fixture;
  std::vector<Selector> load;
  std::vector<std::vector<Selector>> roi_labels;  // extra protected regions

  std::optional<Loading> loading;                // either this ...
  std::optional<std::filesystem::path> stress_path;  // ... or this

  Vec3 build_direction = Vec3::UnitZ();
  int n_layers = 50;
  LayerWeights layer_weights;
  int roi_rings = 4;
  bool roi_from_labels = true;           // false: E_cp gets no regions
  std::vector<Selector> anchor_low;      // empty: default anchors
  std::vector<Selector> anchor_high;
  std::optional<double> psl_max_length;  // default 100 average edge lengths

  LayerToolpathOptions toolpath;
  ThicknessBand thickness_band{0.5, 1.5, true};

  int parallelism = 1;
  std::uint64_t seed = 0;  // no stage draws random numbers; kept for config compatibility
  std::filesystem::path output_dir = "out";
};

/// Parses and validates a JSON config; relative paths resolve against `base_dir`.
PipelineConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);

enum class Stage { Stress, Psl, Slice, Paths, Metrics };
std::string_view to_string(Stage s);
inline constexpr Stage kAllStages[] = {Stage::Stress, Stage::Psl, Stage::Slice, Stage::Paths, Stage::Metrics};

// A failure inside a stage; what() is prefixed with "[stage] ".
struct StageError : Error {
  StageError(Stage s, const std::string& msg);
  Stage stage;
};

using Logger = std::function<void(std::string_view)>;

/// Runs one stage, reading upstream artifacts from `config.output_dir`.
void run_stage(const PipelineConfig& config, Stage stage, const Logger& log = {});
/// Runs every stage in order.
void run_pipeline(const PipelineConfig& config, const Logger& log = {});

/// Mesh with the config's labels attached.
TetMesh load_labeled_mesh(const PipelineConfig& config);

}  // namespace fiberslice
