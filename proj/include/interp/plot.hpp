#pragma once

#include <string>
#include <vector>

#include "interp/csv.hpp"

namespace interp::plot {

// median: median curves. mean: mean curves. errorbars: medians with the
// 7.5/92.5 percentile band. paired: median panel beside the error-bar panel.
enum class Style { Median, Mean, ErrorBars, Paired };

Style parse_style(const std::string& name);
std::string to_string(Style style);

struct PlotOptions {
    Style style = Style::Paired;
    double delta = 0.5;  // confidence parameter of the overlaid bound curves
    bool bounds = true;  // overlay reference curves where the scenario has them
};

// Renders a summary table as a standalone SVG document. Throws MissingColumn
// for absent columns and InvalidArgument when the table has no rows.
std::string render_summary(const csv::Table& summary, const PlotOptions& opts);

// Reads summary_path and writes <stem>_<style>.svg into out_dir (the summary's
// directory when empty). Nothing is written on error. Returns the written path.
std::string plot_summary_file(const std::string& summary_path, const PlotOptions& opts,
                              const std::string& out_dir = "");

}  // namespace interp::plot
