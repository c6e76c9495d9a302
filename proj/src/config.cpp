#include "dashgrid/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "dashgrid/error.hpp"
#include "dashgrid/pgm.hpp"

namespace dashgrid {

using nlohmann::json;

namespace {

json parse_document(std::string_view text, const char* what) {
    try {
        json j = json::parse(text);
        if (!j.is_object()) throw ArgumentError(std::string(what) + ": expected a JSON object");
        return j;
    } catch (const json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& scope) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.contains(key)) throw ArgumentError(scope + key + ": unknown field");
    }
}

template <typename T>
T field(const json& obj, const std::string& key, const std::string& scope) {
    if (!obj.contains(key)) throw ArgumentError(scope + key + ": required field is missing");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ArgumentError(scope + key + ": wrong type");
    }
}

template <typename T>
void optional_field(const json& obj, const std::string& key, const std::string& scope, T& out) {
    if (obj.contains(key)) out = field<T>(obj, key, scope);
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

RefineParams PipelineConfig::refine_params() const {
    RefineParams p;
    p.rotation_degrees = rotation_degrees;
    p.crop = crop;
    p.overlap_threshold = overlap_threshold;
    p.fit = fit;
    p.overlay = overlay_mode;
    p.scan.threads = scan_threads;
    return p;
}

PipelineConfig parse_pipeline_config(std::string_view text, const std::filesystem::path& base_dir) {
    const json j = parse_document(text, "config");
    reject_unknown(j,
                   {"input_mask_path", "tile_path", "output_dir", "rotation_degrees", "crop",
                    "binarize_threshold", "overlap_threshold", "row_dist_threshold",
                    "col_dist_factor", "overlay_mode", "export_formats", "scan_threads"},
                   "");

    PipelineConfig cfg;
    cfg.input_mask_path = resolve(base_dir, field<std::string>(j, "input_mask_path", ""));
    cfg.tile_path = resolve(base_dir, field<std::string>(j, "tile_path", ""));
    cfg.output_dir = resolve(base_dir, field<std::string>(j, "output_dir", ""));
    cfg.fit.row_dist_threshold = field<double>(j, "row_dist_threshold", "");
    cfg.fit.col_dist_factor = field<double>(j, "col_dist_factor", "");
    optional_field(j, "rotation_degrees", "", cfg.rotation_degrees);
    optional_field(j, "binarize_threshold", "", cfg.binarize_threshold);
    optional_field(j, "overlap_threshold", "", cfg.overlap_threshold);
    optional_field(j, "overlay_mode", "", cfg.overlay_mode);
    optional_field(j, "export_formats", "", cfg.export_formats);
    optional_field(j, "scan_threads", "", cfg.scan_threads);
    if (j.contains("crop") && !j.at("crop").is_null()) {
        const json& c = j.at("crop");
        if (!c.is_object()) throw ArgumentError("crop: expected an object");
        reject_unknown(c, {"x0", "y0", "width", "height"}, "crop.");
        cfg.crop = RectRegion{field<int>(c, "x0", "crop."), field<int>(c, "y0", "crop."),
                              field<int>(c, "width", "crop."), field<int>(c, "height", "crop.")};
    }
    return cfg;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
    return parse_pipeline_config(read_file(path), path.parent_path());
}

void validate(const PipelineConfig& cfg) {
    if (!(cfg.overlap_threshold >= 0.0 && cfg.overlap_threshold <= 1.0)) {
        throw ArgumentError("overlap_threshold: must lie in [0, 1]");
    }
    if (!(std::isfinite(cfg.fit.row_dist_threshold) && cfg.fit.row_dist_threshold > 0.0)) {
        throw ArgumentError("row_dist_threshold: must be > 0");
    }
    if (!(std::isfinite(cfg.fit.col_dist_factor) && cfg.fit.col_dist_factor > 0.0)) {
        throw ArgumentError("col_dist_factor: must be > 0");
    }
    if (cfg.binarize_threshold < 0 || cfg.binarize_threshold > 255) {
        throw ArgumentError("binarize_threshold: must lie in [0, 255]");
    }
    if (!std::isfinite(cfg.rotation_degrees)) {
        throw ArgumentError("rotation_degrees: must be finite");
    }
    if (cfg.crop && (cfg.crop->width < 1 || cfg.crop->height < 1 || cfg.crop->x0 < 0 ||
                     cfg.crop->y0 < 0)) {
        throw ArgumentError("crop: origin must be >= 0 and size >= 1");
    }
    for (const auto& f : cfg.export_formats) {
        static const std::set<std::string> known{"csv", "json", "dxf", "pgm"};
        if (!known.contains(f)) throw ArgumentError("export_formats: unknown format '" + f + "'");
    }
    if (cfg.input_mask_path.empty()) throw ArgumentError("input_mask_path: must not be empty");
    if (cfg.tile_path.empty()) throw ArgumentError("tile_path: must not be empty");
    if (cfg.output_dir.empty()) throw ArgumentError("output_dir: must not be empty");
}

SynthConfig parse_synth_config(std::string_view text) {
    const json j = parse_document(text, "synth config");
    reject_unknown(j, {"synth", "corruption"}, "");

    SynthConfig cfg;
    const json& s = j.contains("synth") ? j.at("synth") : json();
    if (!s.is_object()) throw ArgumentError("synth: required object is missing");
    reject_unknown(s,
                   {"width", "height", "tile_width", "tile_height", "row_start", "col_start",
                    "row_spacing", "col_spacing", "n_rows", "n_cols", "jitter", "seed"},
                   "synth.");
    auto& g = cfg.synth;
    g.width = field<int>(s, "width", "synth.");
    g.height = field<int>(s, "height", "synth.");
    g.tile_width = field<int>(s, "tile_width", "synth.");
    g.tile_height = field<int>(s, "tile_height", "synth.");
    g.row_start = field<int>(s, "row_start", "synth.");
    g.col_start = field<int>(s, "col_start", "synth.");
    g.row_spacing = field<int>(s, "row_spacing", "synth.");
    g.col_spacing = field<int>(s, "col_spacing", "synth.");
    g.n_rows = field<int>(s, "n_rows", "synth.");
    g.n_cols = field<int>(s, "n_cols", "synth.");
    optional_field(s, "jitter", "synth.", g.jitter);
    optional_field(s, "seed", "synth.", g.seed);

    if (j.contains("corruption")) {
        const json& c = j.at("corruption");
        if (!c.is_object()) throw ArgumentError("corruption: expected an object");
        reject_unknown(c, {"drop_prob", "erode_px", "noise_density", "seed"}, "corruption.");
        auto& k = cfg.corruption;
        optional_field(c, "drop_prob", "corruption.", k.drop_prob);
        optional_field(c, "erode_px", "corruption.", k.erode_px);
        optional_field(c, "noise_density", "corruption.", k.noise_density);
        optional_field(c, "seed", "corruption.", k.seed);
    }
    return cfg;
}

}  // namespace dashgrid
