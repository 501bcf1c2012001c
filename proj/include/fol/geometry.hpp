#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "fol/errors.hpp"

namespace fol {

// Axis-aligned box in pixels, parameterized by center, width, height.
// Boxes may extend beyond the frame; predictions can exit the view.
struct BBox {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;

  BBox() = default;
  BBox(double cx_, double cy_, double w_, double h_)
      : cx(cx_), cy(cy_), w(w_), h(h_) {}

  double left() const { return cx - 0.5 * w; }
  double right() const { return cx + 0.5 * w; }
  double top() const { return cy - 0.5 * h; }
  double bottom() const { return cy + 0.5 * h; }
  double area() const { return w * h; }

  bool valid() const {
    return w > 0.0 && h > 0.0 && std::isfinite(cx) && std::isfinite(cy) &&
           std::isfinite(w) && std::isfinite(h);
  }

  Eigen::Vector4d as_vector() const { return {cx, cy, w, h}; }
  static BBox from_vector(const Eigen::Vector4d& v) {
    return {v[0], v[1], v[2], v[3]};
  }

  bool operator==(const BBox& o) const = default;
};

struct FrameDims {
  int width = 0;
  int height = 0;

  bool valid() const { return width >= 1 && height >= 1; }
  bool operator==(const FrameDims& o) const = default;
};

// Row-major boolean grid covering a frame.
struct BinaryMask {
  FrameDims dims;
  std::vector<std::uint8_t> bits;

  BinaryMask() = default;
  explicit BinaryMask(FrameDims d)
      : dims(d),
        bits(static_cast<std::size_t>(d.width) * static_cast<std::size_t>(d.height), 0) {}

  std::uint8_t at(int u, int v) const {
    return bits[static_cast<std::size_t>(v) * dims.width + u];
  }
  void set(int u, int v, std::uint8_t b) {
    bits[static_cast<std::size_t>(v) * dims.width + u] = b;
  }
};

// Intersection over union of two axis-aligned boxes. Symmetric, in [0,1].
double iou(const BBox& a, const BBox& b);

// Component-wise arithmetic mean. Throws ContractViolation on empty input.
BBox average_boxes(const std::vector<BBox>& boxes);

// Pixel (u,v) is set iff its center (u+0.5, v+0.5) lies inside any box
// (closed bounds). Empty box list yields the all-zero mask.
BinaryMask rasterize(const std::vector<BBox>& boxes, FrameDims dims);

// |a AND b| / |a OR b|. Two all-zero masks agree perfectly and score 1.
// Throws ContractViolation on dimension mismatch.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

// Population standard deviation (divide by n) of each box component,
// ordered (cx, cy, w, h). Requires at least two boxes.
std::array<double, 4> component_std(const std::vector<BBox>& boxes);

}  // namespace fol
