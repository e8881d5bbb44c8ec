#pragma once

#include <string>
#include <vector>

#include "circlegap/asymptotics.hpp"
#include "circlegap/discrepancy.hpp"

namespace circlegap {

/// Gap classes ordered shortest to longest, with the fixed palette:
/// 3 lengths -> green / blue / red, 2 lengths -> black / orange,
/// 1 length -> black.
std::vector<std::string> gap_palette(size_t distinct_count);

/// Static circle figure: the m+1 arcs between consecutive points of
/// {0, theta, ..., m theta} mod 1, each colored by its exact gap class, with
/// the points drawn on top. Deterministic bytes for identical input.
std::string circle_figure_svg(const GapReport& rep, int size_px = 600);

/// Per-arc rows "start,end,length,class,color" (exact classification,
/// decimal rendering at `digits`).
std::string circle_figure_csv(const GapReport& rep, unsigned digits);

struct ScatterRow {
  long long M = 0;
  int eta = 0;  // argmin index
  std::string min_dm;  // decimal of min D_M
  std::string color;
};

/// The scatter data min over the catalog of D_M for M in [lo, hi], computed
/// by the exact oracle; colors follow the fixed 8-color list indexed by the
/// argmin.
std::vector<ScatterRow> scatter_rows(long long lo, long long hi, unsigned digits);

std::string scatter_csv(const std::vector<ScatterRow>& rows);
std::string scatter_svg(const std::vector<ScatterRow>& rows, int width_px = 900,
                        int height_px = 500);

}  // namespace circlegap
