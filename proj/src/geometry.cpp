#include "fol/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fol {

double iou(const BBox& a, const BBox& b) {
  require(a.valid(), "iou: box a invalid");
  require(b.valid(), "iou: box b invalid");
  const double iw =
      std::min(a.right(), b.right()) - std::max(a.left(), b.left());
  const double ih =
      std::min(a.bottom(), b.bottom()) - std::max(a.top(), b.top());
  if (iw <= 0.0 || ih <= 0.0) return 0.0;
  const double inter = iw * ih;
  return inter / (a.area() + b.area() - inter);
}

BBox average_boxes(const std::vector<BBox>& boxes) {
  require(!boxes.empty(), "average_boxes: empty box list");
  Eigen::Vector4d acc = Eigen::Vector4d::Zero();
  for (const BBox& b : boxes) acc += b.as_vector();
  return BBox::from_vector(acc / static_cast<double>(boxes.size()));
}

BinaryMask rasterize(const std::vector<BBox>& boxes, FrameDims dims) {
  require(dims.valid(), "rasterize: invalid frame dims");
  BinaryMask mask(dims);
  for (const BBox& b : boxes) {
    // Pixel (u,v) centers live at half-integers; the pixel range whose
    // centers fall in [left, right] is [ceil(left-0.5), floor(right-0.5)].
    int u0 = static_cast<int>(std::ceil(b.left() - 0.5));
    int u1 = static_cast<int>(std::floor(b.right() - 0.5));
    int v0 = static_cast<int>(std::ceil(b.top() - 0.5));
    int v1 = static_cast<int>(std::floor(b.bottom() - 0.5));
    u0 = std::max(u0, 0);
    v0 = std::max(v0, 0);
    u1 = std::min(u1, dims.width - 1);
    v1 = std::min(v1, dims.height - 1);
    for (int v = v0; v <= v1; ++v) {
      if (u1 < u0) break;
      std::uint8_t* row = mask.bits.data() + static_cast<std::size_t>(v) * dims.width;
      std::fill(row + u0, row + u1 + 1, std::uint8_t{1});
    }
  }
  return mask;
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
  require(a.dims == b.dims, "mask_iou: dimension mismatch");
  std::size_t inter = 0;
  std::size_t uni = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    inter += (a.bits[i] & b.bits[i]);
    uni += (a.bits[i] | b.bits[i]);
  }
  if (uni == 0) return 1.0;  // object-free frames agree perfectly
  return static_cast<double>(inter) / static_cast<double>(uni);
}

std::array<double, 4> component_std(const std::vector<BBox>& boxes) {
  require(boxes.size() >= 2, "component_std: needs at least two boxes");
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  for (const BBox& b : boxes) mean += b.as_vector();
  mean /= static_cast<double>(boxes.size());
  Eigen::Vector4d var = Eigen::Vector4d::Zero();
  for (const BBox& b : boxes) {
    const Eigen::Vector4d d = b.as_vector() - mean;
    var += d.cwiseProduct(d);
  }
  var /= static_cast<double>(boxes.size());
  return {std::sqrt(var[0]), std::sqrt(var[1]), std::sqrt(var[2]),
          std::sqrt(var[3])};
}

}  // namespace fol
