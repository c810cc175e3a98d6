#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ng3d/tensor.hpp"

namespace ng3d {

/// A 3D scalar field, shape (D, H, W), with subject/component metadata and
/// the min/max observed before normalization (kept so intensities can be
/// mapped back).
struct Volume {
  Tensor data;  // rank 3
  std::string subject_id;
  std::string component_label;
  std::pair<double, double> value_range{0.0, 0.0};

  int64_t d() const { return data.dim(0); }
  int64_t h() const { return data.dim(1); }
  int64_t w() const { return data.dim(2); }
};

struct DegradationSpec {
  double scale_factor = 0.5;  // only x2 super-resolution is supported
  bool rician_enabled = true;
  double rician_sigma = 0.02;
  uint64_t seed = 0;
};

struct DatasetSplit {
  std::vector<std::string> train_subjects;
  std::vector<std::string> val_subjects;
  std::vector<std::string> test_subjects;
  uint64_t seed = 0;
};

/// Aligned (LR 16^3, HR 32^3) training sample. The HR window covers exactly
/// the x2-scaled region of the LR window.
struct PatchPair {
  Tensor lr_patch;  // (16,16,16)
  Tensor hr_patch;  // (32,32,32)
  std::array<int64_t, 3> origin_lr{0, 0, 0};
  std::string subject_id;
};

inline constexpr int64_t kLrPatchSize = 16;
inline constexpr int64_t kHrPatchSize = 32;

Volume normalize_volume(const Volume& v);
Volume crop_to_even(const Volume& v);
Volume downsample_trilinear(const Volume& v, double factor = 0.5);
Volume add_rician_noise(const Volume& v, double sigma, uint64_t seed);
DatasetSplit split_subjects(std::vector<std::string> subject_ids, uint64_t seed);
PatchPair extract_patch_pair(const Volume& hr, const Volume& lr, uint64_t seed);
Volume synthesize_spatial_map(const std::array<int64_t, 3>& shape, int n_blobs, uint64_t seed);

// Tensor-level resampling kernels shared by the data path, the generator
// upsampling stage and the interpolation baseline. Both use half-voxel
// center alignment; at factor 0.5 the downsample reduces to a 2x2x2 box
// average, and the upsample is its alignment inverse.
Tensor downsample_half_3d(const Tensor& v);
Tensor upsample_trilinear_x2_3d(const Tensor& v);

/// x2 trilinear upsampling of a whole volume (the interpolation baseline
/// model).
Volume trilinear_baseline(const Volume& lr);

}  // namespace ng3d
