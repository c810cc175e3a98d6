#include "ng3d/volume.hpp"

#include <algorithm>
#include <cmath>

#include "ng3d/rng.hpp"

namespace ng3d {

Volume normalize_volume(const Volume& v) {
  if (!v.data.all_finite()) fail(Errc::NonFiniteData, "volume contains NaN/Inf");
  Volume out = v;
  const double lo = v.data.min();
  const double hi = v.data.max();
  out.value_range = {lo, hi};
  if (hi > lo) {
    const double inv = 1.0 / (hi - lo);
    for (int64_t i = 0; i < out.data.numel(); ++i) out.data[i] = (out.data[i] - lo) * inv;
  } else {
    out.data.fill(0.0);  // constant volume maps to zeros by convention
  }
  return out;
}

Volume crop_to_even(const Volume& v) {
  std::array<int64_t, 3> dims{v.d(), v.h(), v.w()};
  std::array<int64_t, 3> even{};
  for (int a = 0; a < 3; ++a) {
    even[a] = dims[a] - (dims[a] % 2);
    if (even[a] < 2)
      fail(Errc::DimensionTooSmall, "axis " + std::to_string(a) + " has size " +
                                        std::to_string(dims[a]) + ", cannot crop to nonzero even");
  }
  if (even == dims) return v;
  Volume out = v;
  out.data = Tensor({even[0], even[1], even[2]});
  for (int64_t d = 0; d < even[0]; ++d)
    for (int64_t h = 0; h < even[1]; ++h)
      for (int64_t w = 0; w < even[2]; ++w)
        out.data[idx3(out.data, d, h, w)] = v.data[idx3(v.data, d, h, w)];
  return out;
}

Tensor downsample_half_3d(const Tensor& v) {
  const int64_t D = v.dim(0), H = v.dim(1), W = v.dim(2);
  Tensor out({D / 2, H / 2, W / 2});
  for (int64_t d = 0; d < D / 2; ++d)
    for (int64_t h = 0; h < H / 2; ++h)
      for (int64_t w = 0; w < W / 2; ++w) {
        double s = 0.0;
        for (int64_t dd = 0; dd < 2; ++dd)
          for (int64_t dh = 0; dh < 2; ++dh)
            for (int64_t dw = 0; dw < 2; ++dw)
              s += v[idx3(v, 2 * d + dd, 2 * h + dh, 2 * w + dw)];
        out[idx3(out, d, h, w)] = s * 0.125;
      }
  return out;
}

Volume downsample_trilinear(const Volume& v, double factor) {
  if (factor != 0.5) fail(Errc::BadShape, "only scale factor 0.5 is supported");
  if (v.d() % 2 || v.h() % 2 || v.w() % 2)
    fail(Errc::OddDimension, "all dimensions must be even, got " + v.data.shape_str());
  Volume out = v;
  out.data = downsample_half_3d(v.data);
  return out;
}

namespace {

struct LinearTap {
  int64_t i0, i1;
  double w0, w1;
};

// Output coordinate j maps to input coordinate j/2 - 0.25 (half-voxel
// centers), clamped at the borders.
LinearTap upsample_tap(int64_t j, int64_t n_in) {
  const double x = 0.5 * static_cast<double>(j) - 0.25;
  int64_t i0 = static_cast<int64_t>(std::floor(x));
  const double t = x - static_cast<double>(i0);
  int64_t i1 = i0 + 1;
  i0 = std::clamp<int64_t>(i0, 0, n_in - 1);
  i1 = std::clamp<int64_t>(i1, 0, n_in - 1);
  return {i0, i1, 1.0 - t, t};
}

}  // namespace

Tensor upsample_trilinear_x2_3d(const Tensor& v) {
  const int64_t D = v.dim(0), H = v.dim(1), W = v.dim(2);
  Tensor out({2 * D, 2 * H, 2 * W});
  std::vector<LinearTap> td(static_cast<size_t>(2 * D)), th(static_cast<size_t>(2 * H)),
      tw(static_cast<size_t>(2 * W));
  for (int64_t j = 0; j < 2 * D; ++j) td[j] = upsample_tap(j, D);
  for (int64_t j = 0; j < 2 * H; ++j) th[j] = upsample_tap(j, H);
  for (int64_t j = 0; j < 2 * W; ++j) tw[j] = upsample_tap(j, W);
  for (int64_t d = 0; d < 2 * D; ++d)
    for (int64_t h = 0; h < 2 * H; ++h)
      for (int64_t w = 0; w < 2 * W; ++w) {
        const auto &a = td[d], &b = th[h], &c = tw[w];
        double s = 0.0;
        s += a.w0 * (b.w0 * (c.w0 * v[idx3(v, a.i0, b.i0, c.i0)] + c.w1 * v[idx3(v, a.i0, b.i0, c.i1)]) +
                     b.w1 * (c.w0 * v[idx3(v, a.i0, b.i1, c.i0)] + c.w1 * v[idx3(v, a.i0, b.i1, c.i1)]));
        s += a.w1 * (b.w0 * (c.w0 * v[idx3(v, a.i1, b.i0, c.i0)] + c.w1 * v[idx3(v, a.i1, b.i0, c.i1)]) +
                     b.w1 * (c.w0 * v[idx3(v, a.i1, b.i1, c.i0)] + c.w1 * v[idx3(v, a.i1, b.i1, c.i1)]));
        out[idx3(out, d, h, w)] = s;
      }
  return out;
}

Volume trilinear_baseline(const Volume& lr) {
  Volume out = lr;
  out.data = upsample_trilinear_x2_3d(lr.data);
  return out;
}

Volume add_rician_noise(const Volume& v, double sigma, uint64_t seed) {
  if (sigma < 0.0) fail(Errc::NegativeSigma, "sigma = " + std::to_string(sigma));
  if (sigma == 0.0) return v;
  Volume out = v;
  SeededRng rng(derive_seed(seed, {fnv1a64("rician")}));
  for (int64_t i = 0; i < out.data.numel(); ++i) {
    const double re = out.data[i] + rng.normal(0.0, sigma);
    const double im = rng.normal(0.0, sigma);
    out.data[i] = std::sqrt(re * re + im * im);
  }
  return out;
}

DatasetSplit split_subjects(std::vector<std::string> subject_ids, uint64_t seed) {
  std::sort(subject_ids.begin(), subject_ids.end());
  subject_ids.erase(std::unique(subject_ids.begin(), subject_ids.end()), subject_ids.end());
  const int64_t n = static_cast<int64_t>(subject_ids.size());
  if (n < 3)
    fail(Errc::TooFewSubjects, std::to_string(n) + " distinct subjects, need at least 3");

  SeededRng rng(derive_seed(seed, {fnv1a64("split")}));
  for (int64_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<int64_t>(rng.uniform_int(static_cast<uint64_t>(i + 1)));
    std::swap(subject_ids[i], subject_ids[j]);
  }

  // 90/5/5 rounding toward train; val and test always get at least one.
  const int64_t n_val = std::max<int64_t>(1, n / 20);
  const int64_t n_test = std::max<int64_t>(1, n / 20);
  const int64_t n_train = n - n_val - n_test;

  DatasetSplit split;
  split.seed = seed;
  split.train_subjects.assign(subject_ids.begin(), subject_ids.begin() + n_train);
  split.val_subjects.assign(subject_ids.begin() + n_train, subject_ids.begin() + n_train + n_val);
  split.test_subjects.assign(subject_ids.begin() + n_train + n_val, subject_ids.end());
  return split;
}

PatchPair extract_patch_pair(const Volume& hr, const Volume& lr, uint64_t seed) {
  if (hr.d() != 2 * lr.d() || hr.h() != 2 * lr.h() || hr.w() != 2 * lr.w())
    fail(Errc::ShapeMismatch,
         "hr " + hr.data.shape_str() + " is not 2x lr " + lr.data.shape_str());
  const std::array<int64_t, 3> lr_dims{lr.d(), lr.h(), lr.w()};
  for (int a = 0; a < 3; ++a)
    if (lr_dims[a] < kLrPatchSize)
      fail(Errc::VolumeTooSmall, "lr volume " + lr.data.shape_str() + " cannot fit a " +
                                     std::to_string(kLrPatchSize) + "^3 window");

  SeededRng rng(derive_seed(seed, {fnv1a64("patch")}));
  PatchPair p;
  p.subject_id = hr.subject_id;
  for (int a = 0; a < 3; ++a)
    p.origin_lr[a] =
        static_cast<int64_t>(rng.uniform_int(static_cast<uint64_t>(lr_dims[a] - kLrPatchSize + 1)));

  p.lr_patch = Tensor({kLrPatchSize, kLrPatchSize, kLrPatchSize});
  p.hr_patch = Tensor({kHrPatchSize, kHrPatchSize, kHrPatchSize});
  const auto [od, oh, ow] = p.origin_lr;
  for (int64_t d = 0; d < kLrPatchSize; ++d)
    for (int64_t h = 0; h < kLrPatchSize; ++h)
      for (int64_t w = 0; w < kLrPatchSize; ++w)
        p.lr_patch[idx3(p.lr_patch, d, h, w)] = lr.data[idx3(lr.data, od + d, oh + h, ow + w)];
  for (int64_t d = 0; d < kHrPatchSize; ++d)
    for (int64_t h = 0; h < kHrPatchSize; ++h)
      for (int64_t w = 0; w < kHrPatchSize; ++w)
        p.hr_patch[idx3(p.hr_patch, d, h, w)] =
            hr.data[idx3(hr.data, 2 * od + d, 2 * oh + h, 2 * ow + w)];
  return p;
}

Volume synthesize_spatial_map(const std::array<int64_t, 3>& shape, int n_blobs, uint64_t seed) {
  for (int64_t d : shape)
    if (d < 8) fail(Errc::BadShape, "all dimensions must be >= 8");
  if (n_blobs < 1) fail(Errc::BadShape, "n_blobs must be >= 1");

  SeededRng rng(derive_seed(seed, {fnv1a64("synth")}));
  const int64_t D = shape[0], H = shape[1], W = shape[2];
  Tensor field({D, H, W});

  struct Blob {
    std::array<double, 3> center, inv2s2;
    double amp;
  };
  // n_blobs compact activations plus two broad bumps as smooth background.
  std::vector<Blob> blobs;
  for (int b = 0; b < n_blobs + 2; ++b) {
    const bool background = b >= n_blobs;
    Blob blob;
    for (int a = 0; a < 3; ++a) {
      const double n = static_cast<double>(shape[a]);
      blob.center[a] = background ? rng.uniform(0.2 * n, 0.8 * n) : rng.uniform(0.15 * n, 0.85 * n);
      const double s = background ? rng.uniform(n / 2.5, n / 1.5) : rng.uniform(n / 16.0, n / 6.0);
      blob.inv2s2[a] = 1.0 / (2.0 * s * s);
    }
    blob.amp = background ? rng.uniform(0.04, 0.1) : rng.uniform(0.4, 1.0);
    blobs.push_back(blob);
  }

  std::vector<double> fd(static_cast<size_t>(D)), fh(static_cast<size_t>(H)),
      fw(static_cast<size_t>(W));
  for (const Blob& blob : blobs) {
    for (int64_t i = 0; i < D; ++i)
      fd[i] = std::exp(-(i - blob.center[0]) * (i - blob.center[0]) * blob.inv2s2[0]);
    for (int64_t i = 0; i < H; ++i)
      fh[i] = std::exp(-(i - blob.center[1]) * (i - blob.center[1]) * blob.inv2s2[1]);
    for (int64_t i = 0; i < W; ++i)
      fw[i] = std::exp(-(i - blob.center[2]) * (i - blob.center[2]) * blob.inv2s2[2]);
    for (int64_t d = 0; d < D; ++d)
      for (int64_t h = 0; h < H; ++h) {
        const double adh = blob.amp * fd[d] * fh[h];
        double* row = field.data() + (d * H + h) * W;
        for (int64_t w = 0; w < W; ++w) row[w] += adh * fw[w];
      }
  }

  Volume v;
  v.data = std::move(field);
  return normalize_volume(v);
}

}  // namespace ng3d
