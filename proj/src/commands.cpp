#include "dashgrid/commands.hpp"

#include <ostream>
#include <system_error>
#include <unistd.h>

#include <json.hpp>

#include "dashgrid/error.hpp"
#include "dashgrid/json_io.hpp"
#include "dashgrid/pgm.hpp"
#include "dashgrid/synth.hpp"

namespace dashgrid {

namespace fs = std::filesystem;

void ArtifactSet::add(std::string name, std::string bytes) {
    files_.insert_or_assign(std::move(name), std::move(bytes));
}

void ArtifactSet::commit(const fs::path& dir) const {
    std::error_code ec;
    const fs::path target = fs::absolute(dir, ec);
    if (ec) throw IoError("cannot resolve " + dir.string() + ": " + ec.message());
    const fs::path parent = target.parent_path();
    fs::create_directories(parent, ec);
    if (ec) throw IoError("cannot create " + parent.string() + ": " + ec.message());

    const fs::path staging =
        parent / ("." + target.filename().string() + ".staging-" + std::to_string(::getpid()));
    fs::remove_all(staging, ec);
    fs::create_directory(staging, ec);
    if (ec) throw IoError("cannot create " + staging.string() + ": " + ec.message());
    try {
        for (const auto& [name, bytes] : files_) write_file(staging / name, bytes);
        fs::create_directories(target, ec);
        if (ec) throw IoError("cannot create " + target.string() + ": " + ec.message());
        for (const auto& [name, bytes] : files_) {
            fs::rename(staging / name, target / name, ec);
            if (ec) throw IoError("cannot move " + name + " into " + target.string());
        }
    } catch (...) {
        fs::remove_all(staging, ec);
        throw;
    }
    fs::remove_all(staging, ec);
}

void write_atomically(const fs::path& path, const std::string& bytes) {
    fs::path tmp = path;
    tmp += ".tmp-" + std::to_string(::getpid());
    write_file(tmp, bytes);
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot move output into " + path.string());
    }
}

void run_refine(const PipelineConfig& cfg, std::ostream& out) {
    validate(cfg);
    const BinaryMask input = read_mask_file(cfg.input_mask_path, cfg.binarize_threshold);
    const ReferenceTile tile(read_mask_file(cfg.tile_path, cfg.binarize_threshold));
    const RefineResult result = refine(input, tile, cfg.refine_params());
    const auto& records = result.reconstruction.records;

    ArtifactSet artifacts;
    artifacts.add("refined.pgm", save_pgm(result.reconstruction.mask));
    artifacts.add("grid.json", grid_to_json(result.grid));
    artifacts.add("hits.json", hits_to_json(result.hits));
    for (const auto& format : cfg.export_formats) {
        if (format == "csv") artifacts.add("dashes.csv", export_csv(records));
        if (format == "json") artifacts.add("dashes.json", export_json(records));
        if (format == "dxf") {
            artifacts.add("dashes.dxf", export_dxf(records, result.preprocessed.height()));
        }
        if (format == "pgm") artifacts.add("preprocessed.pgm", save_pgm(result.preprocessed));
    }
    artifacts.commit(cfg.output_dir);

    out << "hits=" << result.hits.size() << " rows=" << result.grid.row_positions.size()
        << " cols=" << result.grid.col_positions.size() << " dashes=" << records.size() << '\n';
}

void run_synth(const SynthConfig& cfg, const fs::path& out_dir, std::ostream& out) {
    const SynthResult truth = generate(cfg.synth);
    const BinaryMask corrupted = corrupt(truth.mask, truth.truth, cfg.corruption);

    ArtifactSet artifacts;
    artifacts.add("truth.pgm", save_pgm(truth.mask));
    artifacts.add("corrupted.pgm", save_pgm(corrupted));
    artifacts.add("truth.csv", export_csv(truth.truth));
    artifacts.add("truth_grid.json", grid_to_json(truth.truth_grid));
    artifacts.commit(out_dir);

    out << "dashes=" << truth.truth.size() << " truth_pixels=" << truth.mask.count()
        << " corrupted_pixels=" << corrupted.count() << '\n';
}

std::string run_eval(const EvalInputs& in) {
    const auto predicted = parse_csv(read_file(in.predicted_csv));
    const auto truth = parse_csv(read_file(in.truth_csv));
    const BinaryMask refined = read_mask_file(in.refined_mask);
    const BinaryMask truth_mask = read_mask_file(in.truth_mask);

    const DetectionMetrics m = detection_metrics(predicted, truth, in.tolerance);
    nlohmann::ordered_json j;
    j["precision"] = m.precision;
    j["recall"] = m.recall;
    j["rmse"] = m.rmse;
    j["iou"] = pixel_iou(refined, truth_mask);
    return j.dump();
}

}  // namespace dashgrid
