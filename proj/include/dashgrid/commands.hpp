#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "dashgrid/config.hpp"

namespace dashgrid {

/// Process exit statuses of the dashgrid tool.
enum class ExitCode : int {
    kOk = 0,
    kValidation = 2,  // ArgumentError, bad flags
    kProcessing = 3,  // ProcessingError
    kIo = 4,          // IoError, FormatError
};

/// A set of named files published into one directory all-or-nothing: every
/// file is first written to a staging directory next to the target and
/// only renamed into place once all writes succeeded.
class ArtifactSet {
public:
    void add(std::string name, std::string bytes);
    void commit(const std::filesystem::path& dir) const;
    const std::map<std::string, std::string>& files() const { return files_; }

private:
    std::map<std::string, std::string> files_;
};

/// Writes through a temporary sibling file and renames it over `path`.
void write_atomically(const std::filesystem::path& path, const std::string& bytes);

/// Full pipeline driven by a validated config. Writes refined.pgm,
/// grid.json, hits.json and the requested exports (dashes.csv,
/// dashes.json, dashes.dxf, preprocessed.pgm) into cfg.output_dir and
/// prints a one-line summary to `out`. Throws on any failure, in which
/// case nothing has been written.
void run_refine(const PipelineConfig& cfg, std::ostream& out);

/// Writes truth.pgm, corrupted.pgm, truth.csv and truth_grid.json.
void run_synth(const SynthConfig& cfg, const std::filesystem::path& out_dir, std::ostream& out);

struct EvalInputs {
    std::filesystem::path predicted_csv;
    std::filesystem::path truth_csv;
    std::filesystem::path refined_mask;
    std::filesystem::path truth_mask;
    double tolerance = 2.0;
};

/// {"precision":..,"recall":..,"rmse":..,"iou":..} on one line.
std::string run_eval(const EvalInputs& in);

/// Parses argv, dispatches the subcommand and maps exceptions onto
/// ExitCode values. Diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dashgrid
