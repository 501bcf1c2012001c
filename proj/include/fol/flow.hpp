#pragma once

#include <Eigen/Dense>

#include "fol/geometry.hpp"

namespace fol {

// Pooled motion feature of one object: 5x5 spatial bins x 2 flow
// channels, flattened row-major with the channel index minor.
inline constexpr int kRoiBins = 5;
inline constexpr int kFeatureSize = kRoiBins * kRoiBins * 2;
using ObjectFeature = Eigen::Matrix<double, kFeatureSize, 1>;

// Dense 2-channel motion field in pixels/frame. The grid may be coarser
// than the frame it describes: `dims` is the grid resolution and `frame`
// the pixel extent it covers. Grid node (u,v) holds the flow at image
// point ((u+0.5)*frame.w/dims.w, (v+0.5)*frame.h/dims.h), so sampling a
// coarse grid bilinearly is the lazy form of upsampling it on load.
struct FlowField {
  FrameDims dims;   // grid resolution
  FrameDims frame;  // pixel extent covered by the grid
  Eigen::MatrixXd du;  // dims.height rows x dims.width cols
  Eigen::MatrixXd dv;

  FlowField() = default;
  explicit FlowField(FrameDims grid_dims)
      : FlowField(grid_dims, grid_dims) {}
  FlowField(FrameDims grid_dims, FrameDims frame_dims)
      : dims(grid_dims),
        frame(frame_dims),
        du(Eigen::MatrixXd::Zero(grid_dims.height, grid_dims.width)),
        dv(Eigen::MatrixXd::Zero(grid_dims.height, grid_dims.width)) {}
};

// Bilinear sample of one channel at image point (x, y), border-clamped.
double bilinear_sample(const Eigen::MatrixXd& grid, FrameDims dims,
                       FrameDims frame, double x, double y);

// RoIPool with bilinear interpolation: samples the flow at the centers of
// a 5x5 grid of bins spanning the box interior, clamping out-of-frame
// coordinates to the border.
ObjectFeature roi_pool(const FlowField& flow, const BBox& box);

}  // namespace fol
