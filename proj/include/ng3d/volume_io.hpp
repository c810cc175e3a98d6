#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ng3d/volume.hpp"

namespace ng3d {

enum class VolumeFormat { NiftiLike, RawF32 };

/// Loads a volume from disk.
///
/// raw-f32: little-endian float32 in (D,H,W) row-major order, with a JSON
/// sidecar `<path>.json` holding `{"shape": [D,H,W], "subject": ..,
/// "component": ..}`.
///
/// nifti-like: single-file NIfTI-1, optionally gzipped. Only the shape and
/// the float voxel data are consumed; affine/orientation metadata is
/// ignored. Shape is reported as (D,H,W) = (nz,ny,nx).
Volume load_volume(const std::filesystem::path& path, VolumeFormat format);

void save_volume_raw_f32(const Volume& v, const std::filesystem::path& path);

struct ManifestRecord {
  std::string path;  // relative to the manifest's directory
  std::string subject;
  std::string component;
};

std::vector<ManifestRecord> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::vector<ManifestRecord>& records,
                    const std::filesystem::path& path);

DatasetSplit read_split(const std::filesystem::path& path);
void write_split(const DatasetSplit& split, const std::filesystem::path& path);

uint64_t hash_volume_bytes(const Volume& v);

}  // namespace ng3d
