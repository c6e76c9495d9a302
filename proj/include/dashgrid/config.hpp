#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dashgrid/pipeline.hpp"
#include "dashgrid/synth.hpp"

namespace dashgrid {

/// Everything `dashgrid refine` needs. Relative paths in the JSON document
/// are resolved against the directory holding the config file.
struct PipelineConfig {
    std::filesystem::path input_mask_path;
    std::filesystem::path tile_path;
    std::filesystem::path output_dir;
    double rotation_degrees = 0.0;
    std::optional<RectRegion> crop;
    int binarize_threshold = 128;
    double overlap_threshold = 0.6;
    // Row and column thresholds are data dependent and have no default;
    // zero means "not set" and fails validation.
    FitConfig fit;
    bool overlay_mode = false;
    std::vector<std::string> export_formats{"csv"};
    unsigned scan_threads = 0;

    RefineParams refine_params() const;
};

/// Throws ArgumentError naming the offending field when a key is missing,
/// mistyped or unknown. Value ranges are checked by validate() so that
/// command-line overrides can be applied in between.
PipelineConfig parse_pipeline_config(std::string_view json,
                                     const std::filesystem::path& base_dir);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);
void validate(const PipelineConfig& cfg);

struct SynthConfig {
    SynthSpec synth;
    CorruptionSpec corruption;
};

/// {"synth": {...}, "corruption": {...}}; corruption is optional.
SynthConfig parse_synth_config(std::string_view json);

}  // namespace dashgrid
