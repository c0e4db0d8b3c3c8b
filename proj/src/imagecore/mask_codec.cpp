#include "ocusim/mask_codec.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace ocusim {

LabelMask parse_color_mask(const Image& img, const Palette& palette, double tol) {
  if (img.channels != 3) throw std::invalid_argument("parse_color_mask: 3-channel input required");
  if (tol < 0) throw std::invalid_argument("parse_color_mask: tol must be >= 0");
  palette.validate();

  struct Entry {
    int id;
    double r, g, b;
  };
  std::vector<Entry> entries;
  for (const auto& e : palette.entries)
    entries.push_back({e.id, e.rgb[0] / 255.0, e.rgb[1] / 255.0, e.rgb[2] / 255.0});
  // lowest class id wins ties
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });

  LabelMask mask(img.width, img.height);
  double tol2 = tol * tol;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double r = img.at(x, y, 0), g = img.at(x, y, 1), b = img.at(x, y, 2);
      int best = 0;
      double best_d = tol2;
      for (const auto& e : entries) {
        double dr = r - e.r, dg = g - e.g, db = b - e.b;
        double d = dr * dr + dg * dg + db * db;
        if (d < best_d || (best == 0 && d == best_d)) {  // <= tol accepted, strict-better replaces
          best = e.id;
          best_d = d;
        }
      }
      mask.at(x, y) = best;
    }
  }
  return mask;
}

Image encode_color_mask(const LabelMask& mask, const Palette& palette) {
  palette.validate();
  Image img(mask.width, mask.height, 3, 0.0f);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      int id = mask.at(x, y);
      if (id == 0) continue;
      const PaletteEntry* e = palette.find(id);
      if (!e) throw std::invalid_argument("encode_color_mask: label id " + std::to_string(id) +
                                          " not in palette");
      for (int c = 0; c < 3; ++c) img.at(x, y, c) = e->rgb[c] / 255.0f;
    }
  }
  return img;
}

std::vector<std::pair<int, LabelMask>> standardize_labels(const LabelMask& mask) {
  std::map<int, LabelMask> per_class;
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      int id = mask.at(x, y);
      if (id == 0) continue;
      auto it = per_class.find(id);
      if (it == per_class.end())
        it = per_class.emplace(id, LabelMask(mask.width, mask.height)).first;
      it->second.at(x, y) = 1;
    }
  }
  std::vector<std::pair<int, LabelMask>> out;
  for (auto& [id, m] : per_class) out.emplace_back(id, std::move(m));
  return out;
}

bool tiny_target_filter(const LabelMask& binary, int threshold) {
  int fg = 0;
  for (int v : binary.labels) {
    if (v != 0 && v != 1) throw std::invalid_argument("tiny_target_filter: mask must be binary");
    fg += v;
  }
  return fg >= threshold;
}

}  // namespace ocusim
