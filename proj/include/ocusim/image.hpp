#pragma once

#include <array>
#include <string>
#include <vector>

namespace ocusim {

// H x W x C raster, row-major interleaved, channel values in [0,1].
struct Image {
  int width = 0;
  int height = 0;
  int channels = 1;  // 1 or 3
  std::vector<float> data;

  Image() = default;
  Image(int w, int h, int c, float fill = 0.0f);

  float& at(int x, int y, int c = 0) { return data[(static_cast<size_t>(y) * width + x) * channels + c]; }
  float at(int x, int y, int c = 0) const { return data[(static_cast<size_t>(y) * width + x) * channels + c]; }

  size_t size() const { return data.size(); }
  bool same_dims(const Image& o) const {
    return width == o.width && height == o.height && channels == o.channels;
  }

  void clamp01();
  Image to_gray() const;  // channel mean
  Image to_rgb() const;   // replicate gray channel
  void validate() const;  // throws if invariants are broken
};

// H x W integer class map; 0 is background.
struct LabelMask {
  int width = 0;
  int height = 0;
  std::vector<int> labels;

  LabelMask() = default;
  LabelMask(int w, int h, int fill = 0);

  int& at(int x, int y) { return labels[static_cast<size_t>(y) * width + x]; }
  int at(int x, int y) const { return labels[static_cast<size_t>(y) * width + x]; }

  size_t size() const { return labels.size(); }
  int count(int cls) const;
  int foreground_count() const;  // nonzero pixels
  bool same_dims(const LabelMask& o) const { return width == o.width && height == o.height; }
};

struct PaletteEntry {
  int id = 0;
  std::array<int, 3> rgb{0, 0, 0};  // 0..255
  std::string name;
};

// Class id -> display colour binding. Background (id 0) is implicit black and
// never listed.
struct Palette {
  std::vector<PaletteEntry> entries;

  const PaletteEntry* find(int id) const;
  void validate() const;  // unique ids, unique colours, no background entry

  std::string to_json() const;
  static Palette from_json(const std::string& text);

  // disc/cup/vessels/fovea/lesions/rpe_band/hole bindings used by the forge
  static Palette default_palette();
};

// Depth-ordered stack of 2D planes sharing one width/height.
struct Volume {
  int width = 0;
  int height = 0;
  int depth = 0;
  int channels = 1;
  std::vector<float> data;  // plane-major

  Image plane(int k) const;
};

std::vector<Image> slice_volume(const Volume& v);
Volume stack_slices(const std::vector<Image>& slices);

Image resize_bilinear(const Image& img, int new_w, int new_h);

// Per-pixel |a-b| averaged over channels.
Image abs_diff(const Image& a, const Image& b);

}  // namespace ocusim
