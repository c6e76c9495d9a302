#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "dashgrid/commands.hpp"
#include "dashgrid/error.hpp"
#include "dashgrid/json_io.hpp"
#include "dashgrid/pgm.hpp"

namespace dashgrid {

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

struct RefineArgs {
    std::string config;
    std::optional<double> overlap_threshold;
    std::optional<double> row_dist;
    std::optional<double> col_factor;
    std::optional<std::string> output_dir;
    std::optional<unsigned> threads;
};

struct StageArgs {
    std::string in;
    std::string out;
    std::string tile;
    int threshold = 128;
    double degrees = 0.0;
    RectRegion region;
    double overlap = 0.6;
    unsigned threads = 0;
    double row_dist = 0.0;
    double col_factor = 0.0;
    int width = 0;
    int height = 0;
    std::string csv;
    std::string json;
    std::string dxf;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Refine binary dash-line masks into a regular dash grid"};
    app.require_subcommand(1);

    RefineArgs ra;
    auto* refine_cmd = app.add_subcommand("refine", "Run the full pipeline from a JSON config");
    refine_cmd->add_option("-c,--config", ra.config, "Pipeline config (JSON)")->required();
    refine_cmd->add_option("--overlap-threshold", ra.overlap_threshold);
    refine_cmd->add_option("--row-dist", ra.row_dist, "Row clustering gap in pixels");
    refine_cmd->add_option("--col-factor", ra.col_factor,
                           "Column clustering gap as a multiple of the mean column spacing");
    refine_cmd->add_option("-o,--output-dir", ra.output_dir);
    refine_cmd->add_option("--threads", ra.threads, "Scan threads, 0 = all cores");

    std::string synth_config;
    std::string synth_out;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic grid and corrupt it");
    synth_cmd->add_option("-c,--config", synth_config, "Synth spec (JSON)")->required();
    synth_cmd->add_option("-o,--out", synth_out, "Output directory")->required();

    EvalInputs ev;
    auto* eval_cmd = app.add_subcommand("eval", "Score predicted dashes against truth");
    eval_cmd->add_option("--predicted", ev.predicted_csv, "Predicted dashes CSV")->required();
    eval_cmd->add_option("--truth", ev.truth_csv, "Truth dashes CSV")->required();
    eval_cmd->add_option("--refined", ev.refined_mask, "Refined mask PGM")->required();
    eval_cmd->add_option("--truth-mask", ev.truth_mask, "Truth mask PGM")->required();
    eval_cmd->add_option("--tolerance", ev.tolerance, "Match radius in pixels");

    StageArgs sa;
    auto* bin_cmd = app.add_subcommand("binarize", "Threshold a grayscale PGM");
    bin_cmd->add_option("-i,--in", sa.in)->required();
    bin_cmd->add_option("-o,--out", sa.out)->required();
    bin_cmd->add_option("-t,--threshold", sa.threshold)->check(CLI::Range(0, 255));

    auto* rot_cmd = app.add_subcommand("rotate", "Rotate a mask counterclockwise");
    rot_cmd->add_option("-i,--in", sa.in)->required();
    rot_cmd->add_option("-o,--out", sa.out)->required();
    rot_cmd->add_option("-d,--degrees", sa.degrees)->required();

    auto* crop_cmd = app.add_subcommand("crop", "Cut a rectangle out of a mask");
    crop_cmd->add_option("-i,--in", sa.in)->required();
    crop_cmd->add_option("-o,--out", sa.out)->required();
    crop_cmd->add_option("--x0", sa.region.x0)->required();
    crop_cmd->add_option("--y0", sa.region.y0)->required();
    crop_cmd->add_option("--width", sa.region.width)->required();
    crop_cmd->add_option("--height", sa.region.height)->required();

    auto* scan_cmd = app.add_subcommand("scan", "Template-scan a mask, write hits JSON");
    scan_cmd->add_option("-i,--in", sa.in, "Mask PGM")->required();
    scan_cmd->add_option("--tile", sa.tile, "Reference tile PGM")->required();
    scan_cmd->add_option("-o,--out", sa.out, "Hits JSON")->required();
    scan_cmd->add_option("--overlap-threshold", sa.overlap);
    scan_cmd->add_option("--threads", sa.threads);

    auto* fit_cmd = app.add_subcommand("fit", "Cluster hits into a grid model");
    fit_cmd->add_option("-i,--in", sa.in, "Hits JSON")->required();
    fit_cmd->add_option("--tile", sa.tile, "Reference tile PGM")->required();
    fit_cmd->add_option("-o,--out", sa.out, "Grid JSON")->required();
    fit_cmd->add_option("--row-dist", sa.row_dist)->required();
    fit_cmd->add_option("--col-factor", sa.col_factor)->required();

    auto* rec_cmd = app.add_subcommand("reconstruct", "Stamp the tile on every grid cell");
    rec_cmd->add_option("-i,--in", sa.in, "Grid JSON")->required();
    rec_cmd->add_option("--tile", sa.tile, "Reference tile PGM")->required();
    rec_cmd->add_option("-o,--out", sa.out, "Refined mask PGM")->required();
    rec_cmd->add_option("--width", sa.width)->required();
    rec_cmd->add_option("--height", sa.height)->required();
    rec_cmd->add_option("--csv", sa.csv);
    rec_cmd->add_option("--json", sa.json);
    rec_cmd->add_option("--dxf", sa.dxf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? code(ExitCode::kOk) : code(ExitCode::kValidation);
    }

    try {
        if (*refine_cmd) {
            PipelineConfig cfg = load_pipeline_config(ra.config);
            if (ra.overlap_threshold) cfg.overlap_threshold = *ra.overlap_threshold;
            if (ra.row_dist) cfg.fit.row_dist_threshold = *ra.row_dist;
            if (ra.col_factor) cfg.fit.col_dist_factor = *ra.col_factor;
            if (ra.output_dir) cfg.output_dir = *ra.output_dir;
            if (ra.threads) cfg.scan_threads = *ra.threads;
            run_refine(cfg, out);
        } else if (*synth_cmd) {
            run_synth(parse_synth_config(read_file(synth_config)), synth_out, out);
        } else if (*eval_cmd) {
            out << run_eval(ev) << '\n';
        } else if (*bin_cmd) {
            write_atomically(sa.out, save_pgm(binarize(read_pgm_file(sa.in), sa.threshold)));
        } else if (*rot_cmd) {
            write_atomically(sa.out, save_pgm(rotate(read_mask_file(sa.in), sa.degrees)));
        } else if (*crop_cmd) {
            write_atomically(sa.out, save_pgm(crop(read_mask_file(sa.in), sa.region)));
        } else if (*scan_cmd) {
            const ReferenceTile tile(read_mask_file(sa.tile));
            const auto hits =
                scan_locations(read_mask_file(sa.in), tile, sa.overlap, {sa.threads});
            write_atomically(sa.out, hits_to_json(hits));
            out << "hits=" << hits.size() << '\n';
        } else if (*fit_cmd) {
            const ReferenceTile tile(read_mask_file(sa.tile));
            const auto hits = hits_from_json(read_file(sa.in));
            const GridModel grid = fit_grid(hits, tile, {sa.row_dist, sa.col_factor});
            write_atomically(sa.out, grid_to_json(grid));
            out << "rows=" << grid.row_positions.size() << " cols=" << grid.col_positions.size()
                << '\n';
        } else if (*rec_cmd) {
            const ReferenceTile tile(read_mask_file(sa.tile));
            const GridModel grid = grid_from_json(read_file(sa.in));
            const auto rec = reconstruct_mask(grid, tile, sa.width, sa.height);
            write_atomically(sa.out, save_pgm(rec.mask));
            if (!sa.csv.empty()) write_atomically(sa.csv, export_csv(rec.records));
            if (!sa.json.empty()) write_atomically(sa.json, export_json(rec.records));
            if (!sa.dxf.empty()) write_atomically(sa.dxf, export_dxf(rec.records, sa.height));
            out << "dashes=" << rec.records.size() << '\n';
        }
        return code(ExitCode::kOk);
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return code(ExitCode::kValidation);
    } catch (const ProcessingError& e) {
        err << "error: " << e.what() << '\n';
        return code(ExitCode::kProcessing);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return code(ExitCode::kIo);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return code(ExitCode::kIo);
    }
}

}  // namespace dashgrid
