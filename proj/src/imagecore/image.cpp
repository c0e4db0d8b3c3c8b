#include "ocusim/image.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace ocusim {

Image::Image(int w, int h, int c, float fill)
    : width(w), height(h), channels(c), data(static_cast<size_t>(w) * h * c, fill) {
  if (w < 0 || h < 0 || (c != 1 && c != 3)) throw std::invalid_argument("Image: bad dimensions");
}

void Image::clamp01() {
  for (auto& v : data) v = std::min(1.0f, std::max(0.0f, v));
}

Image Image::to_gray() const {
  if (channels == 1) return *this;
  Image g(width, height, 1);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      g.at(x, y) = (at(x, y, 0) + at(x, y, 1) + at(x, y, 2)) / 3.0f;
  return g;
}

Image Image::to_rgb() const {
  if (channels == 3) return *this;
  Image c(width, height, 3);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      for (int k = 0; k < 3; ++k) c.at(x, y, k) = at(x, y);
  return c;
}

void Image::validate() const {
  if (channels != 1 && channels != 3) throw std::invalid_argument("Image: channels must be 1 or 3");
  if (data.size() != static_cast<size_t>(width) * height * channels)
    throw std::invalid_argument("Image: data length does not match dims");
  for (float v : data)
    if (!(v >= 0.0f && v <= 1.0f)) throw std::invalid_argument("Image: value outside [0,1]");
}

LabelMask::LabelMask(int w, int h, int fill)
    : width(w), height(h), labels(static_cast<size_t>(w) * h, fill) {}

int LabelMask::count(int cls) const {
  int n = 0;
  for (int v : labels) n += (v == cls);
  return n;
}

int LabelMask::foreground_count() const {
  int n = 0;
  for (int v : labels) n += (v != 0);
  return n;
}

const PaletteEntry* Palette::find(int id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

void Palette::validate() const {
  std::set<int> ids;
  std::set<std::array<int, 3>> colors;
  for (const auto& e : entries) {
    if (e.id == 0) throw std::invalid_argument("Palette: background (id 0) must not be listed");
    if (!ids.insert(e.id).second) throw std::invalid_argument("Palette: duplicate class id");
    if (!colors.insert(e.rgb).second) throw std::invalid_argument("Palette: duplicate colour");
    for (int c : e.rgb)
      if (c < 0 || c > 255) throw std::invalid_argument("Palette: colour out of range");
  }
}

std::string Palette::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries)
    j.push_back({{"id", e.id}, {"name", e.name}, {"rgb", {e.rgb[0], e.rgb[1], e.rgb[2]}}});
  return j.dump(2);
}

Palette Palette::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Palette p;
  for (const auto& item : j) {
    PaletteEntry e;
    e.id = item.at("id").get<int>();
    e.name = item.at("name").get<std::string>();
    auto rgb = item.at("rgb");
    if (rgb.size() != 3) throw std::invalid_argument("Palette: rgb must have 3 components");
    for (int k = 0; k < 3; ++k) e.rgb[k] = rgb[k].get<int>();
    p.entries.push_back(e);
  }
  p.validate();
  return p;
}

Palette Palette::default_palette() {
  Palette p;
  p.entries = {
      {1, {255, 0, 0}, "disc"},     {2, {0, 255, 0}, "cup"},
      {3, {0, 0, 255}, "vessels"},  {4, {255, 255, 0}, "fovea"},
      {5, {0, 255, 255}, "lesion"}, {6, {255, 0, 255}, "rpe_band"},
      {7, {255, 128, 0}, "hole"},
  };
  return p;
}

Image Volume::plane(int k) const {
  Image img(width, height, channels);
  size_t plane_size = static_cast<size_t>(width) * height * channels;
  std::copy_n(data.begin() + static_cast<size_t>(k) * plane_size, plane_size, img.data.begin());
  return img;
}

std::vector<Image> slice_volume(const Volume& v) {
  if (v.depth < 1) throw std::invalid_argument("slice_volume: depth must be >= 1");
  if (v.data.size() != static_cast<size_t>(v.width) * v.height * v.depth * v.channels)
    throw std::invalid_argument("slice_volume: data length does not match dims");
  std::vector<Image> slices;
  slices.reserve(v.depth);
  for (int k = 0; k < v.depth; ++k) slices.push_back(v.plane(k));
  return slices;
}

Volume stack_slices(const std::vector<Image>& slices) {
  if (slices.empty()) throw std::invalid_argument("stack_slices: empty slice list");
  Volume v;
  v.width = slices[0].width;
  v.height = slices[0].height;
  v.channels = slices[0].channels;
  v.depth = static_cast<int>(slices.size());
  v.data.reserve(slices[0].data.size() * slices.size());
  for (const auto& s : slices) {
    if (!s.same_dims(slices[0])) throw std::invalid_argument("stack_slices: inconsistent slice dims");
    v.data.insert(v.data.end(), s.data.begin(), s.data.end());
  }
  return v;
}

Image resize_bilinear(const Image& img, int new_w, int new_h) {
  if (new_w < 1 || new_h < 1) throw std::invalid_argument("resize_bilinear: bad target dims");
  Image out(new_w, new_h, img.channels);
  double sx = static_cast<double>(img.width) / new_w;
  double sy = static_cast<double>(img.height) / new_h;
  for (int y = 0; y < new_h; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    int y0 = static_cast<int>(std::floor(fy));
    double wy = fy - y0;
    int y1 = std::min(y0 + 1, img.height - 1);
    y0 = std::max(y0, 0);
    for (int x = 0; x < new_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      int x0 = static_cast<int>(std::floor(fx));
      double wx = fx - x0;
      int x1 = std::min(x0 + 1, img.width - 1);
      x0 = std::max(x0, 0);
      for (int c = 0; c < img.channels; ++c) {
        double top = img.at(x0, y0, c) * (1 - wx) + img.at(x1, y0, c) * wx;
        double bot = img.at(x0, y1, c) * (1 - wx) + img.at(x1, y1, c) * wx;
        out.at(x, y, c) = static_cast<float>(top * (1 - wy) + bot * wy);
      }
    }
  }
  return out;
}

Image abs_diff(const Image& a, const Image& b) {
  if (!a.same_dims(b)) throw std::invalid_argument("abs_diff: dim mismatch");
  Image d(a.width, a.height, 1);
  for (int y = 0; y < a.height; ++y)
    for (int x = 0; x < a.width; ++x) {
      float s = 0;
      for (int c = 0; c < a.channels; ++c) s += std::fabs(a.at(x, y, c) - b.at(x, y, c));
      d.at(x, y) = s / a.channels;
    }
  return d;
}

}  // namespace ocusim
