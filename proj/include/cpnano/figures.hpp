#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cpnano/types.hpp"

namespace cpnano::figures {

/// One curve of a preset: label plus the scaled entropy as a function of y.
struct Curve {
    std::string label;
    std::function<double(double)> fn;
};

/// A reproducible figure configuration: every parameter comes from the
/// corresponding published figure; curves are sampled on a uniform ZT grid
/// (y = 4 pi ZT) and written as CSV.
struct FigurePreset {
    std::string id;
    std::string description;
    double zt_max = 1.0;
    int rows = 501;
    std::vector<Curve> curves;
};

/// Sampled curve data ready for CSV export; first column is ZT.
struct FigureData {
    std::string id;
    std::vector<std::string> columns;  ///< including the leading "ZT"
    std::vector<std::vector<double>> rows;
};

std::vector<std::string> figure_ids();

/// Throws std::invalid_argument for an unknown id.
const FigurePreset& figure_preset(const std::string& id);

FigureData generate_figure(const std::string& id);

void write_csv(const FigureData& data, std::ostream& os);
std::string to_csv(const FigureData& data);

}  // namespace cpnano::figures
