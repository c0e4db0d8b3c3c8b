#pragma once

#include <utility>
#include <vector>

#include "ocusim/image.hpp"

namespace ocusim {

// Anti-aliased mask renders still parse correctly at this distance on the
// phantom corpus; exact renders parse at tol 0.
constexpr double kDefaultParseTol = 0.35;

// Nearest-palette assignment in RGB (values scaled to [0,1]); pixels farther
// than tol from every entry become background. Ties go to the lowest class id.
LabelMask parse_color_mask(const Image& img, const Palette& palette, double tol = kDefaultParseTol);

// Inverse of parse_color_mask at tol 0: background black, classes at their
// palette colours.
Image encode_color_mask(const LabelMask& mask, const Palette& palette);

// One binary {0,1} mask per distinct nonzero class, ordered by class id.
std::vector<std::pair<int, LabelMask>> standardize_labels(const LabelMask& mask);

// Keep rule for tiny annotated targets: foreground count >= threshold.
bool tiny_target_filter(const LabelMask& binary, int threshold = 50);

}  // namespace ocusim
