#include "ng3d/volume_io.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

#include "json.hpp"
#include "ng3d/rng.hpp"

namespace ng3d {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json read_json_file(const std::filesystem::path& path, Errc missing_code) {
  std::ifstream in(path);
  if (!in) fail(missing_code, path.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::CorruptHeader, path.string() + ": " + e.what());
  }
  return j;
}

void write_json_file(const ordered_json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoFailure, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

Volume load_raw_f32(const std::filesystem::path& path) {
  const auto sidecar = std::filesystem::path(path.string() + ".json");
  if (!std::filesystem::exists(path)) fail(Errc::MissingFile, path.string());
  const ordered_json meta = read_json_file(sidecar, Errc::CorruptHeader);
  if (!meta.contains("shape") || !meta["shape"].is_array() || meta["shape"].size() != 3)
    fail(Errc::CorruptHeader, sidecar.string() + ": missing or malformed \"shape\"");

  std::array<int64_t, 3> shape{};
  for (int a = 0; a < 3; ++a) {
    shape[a] = meta["shape"][a].get<int64_t>();
    if (shape[a] < 1) fail(Errc::CorruptHeader, sidecar.string() + ": non-positive dimension");
  }
  const int64_t n = shape[0] * shape[1] * shape[2];

  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MissingFile, path.string());
  std::vector<float> raw(static_cast<size_t>(n));
  in.read(reinterpret_cast<char*>(raw.data()), n * static_cast<int64_t>(sizeof(float)));
  if (in.gcount() != n * static_cast<int64_t>(sizeof(float)) || in.peek() != EOF)
    fail(Errc::CorruptHeader,
         path.string() + ": file length does not match header shape " +
             std::to_string(shape[0]) + "x" + std::to_string(shape[1]) + "x" +
             std::to_string(shape[2]));

  Volume v;
  v.data = Tensor({shape[0], shape[1], shape[2]});
  for (int64_t i = 0; i < n; ++i) v.data[i] = static_cast<double>(raw[static_cast<size_t>(i)]);
  v.subject_id = meta.value("subject", "");
  v.component_label = meta.value("component", "");
  return v;
}

#pragma pack(push, 1)
struct NiftiHeader {
  int32_t sizeof_hdr;
  char pad1[36];
  int16_t dim[8];
  char pad2[14];
  int16_t datatype;
  int16_t bitpix;
  char pad3[34];
  float vox_offset;
  char pad4[228];
  char magic[4];
};
#pragma pack(pop)
static_assert(sizeof(NiftiHeader) == 348, "NIfTI-1 header must be 348 bytes");

Volume load_nifti_like(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) fail(Errc::MissingFile, path.string());
  gzFile f = gzopen(path.string().c_str(), "rb");  // reads plain files too
  if (!f) fail(Errc::MissingFile, path.string());
  struct Closer {
    gzFile f;
    ~Closer() { gzclose(f); }
  } closer{f};

  NiftiHeader hdr{};
  if (gzread(f, &hdr, sizeof(hdr)) != static_cast<int>(sizeof(hdr)))
    fail(Errc::CorruptHeader, path.string() + ": truncated header");
  if (hdr.sizeof_hdr != 348)
    fail(Errc::CorruptHeader, path.string() + ": sizeof_hdr != 348 (byte-swapped files unsupported)");
  if (std::strncmp(hdr.magic, "n+1", 3) != 0)
    fail(Errc::CorruptHeader, path.string() + ": not a single-file NIfTI-1 (magic)");
  if (hdr.dim[0] < 3 || hdr.dim[0] > 7)
    fail(Errc::CorruptHeader, path.string() + ": dim[0] out of range");
  for (int i = 4; i <= hdr.dim[0]; ++i)
    if (hdr.dim[i] > 1) fail(Errc::CorruptHeader, path.string() + ": 4D+ volumes unsupported");
  if (hdr.datatype != 16 && hdr.datatype != 64)
    fail(Errc::CorruptHeader,
         path.string() + ": datatype " + std::to_string(hdr.datatype) + " unsupported");

  const int64_t nx = hdr.dim[1], ny = hdr.dim[2], nz = hdr.dim[3];
  if (nx < 1 || ny < 1 || nz < 1) fail(Errc::CorruptHeader, path.string() + ": bad dimensions");
  const int64_t n = nx * ny * nz;

  const auto offset = static_cast<int64_t>(hdr.vox_offset);
  if (offset < 348) fail(Errc::CorruptHeader, path.string() + ": vox_offset < 348");
  std::vector<char> skip(static_cast<size_t>(offset - 348));
  if (!skip.empty() && gzread(f, skip.data(), static_cast<unsigned>(skip.size())) !=
                           static_cast<int>(skip.size()))
    fail(Errc::CorruptHeader, path.string() + ": truncated before voxel data");

  Volume v;
  v.data = Tensor({nz, ny, nx});  // x is fastest-varying on disk, matches W
  if (hdr.datatype == 16) {
    std::vector<float> raw(static_cast<size_t>(n));
    if (gzread(f, raw.data(), static_cast<unsigned>(n * sizeof(float))) !=
        static_cast<int>(n * sizeof(float)))
      fail(Errc::CorruptHeader, path.string() + ": truncated voxel data");
    for (int64_t i = 0; i < n; ++i) v.data[i] = static_cast<double>(raw[static_cast<size_t>(i)]);
  } else {
    std::vector<double> raw(static_cast<size_t>(n));
    if (gzread(f, raw.data(), static_cast<unsigned>(n * sizeof(double))) !=
        static_cast<int>(n * sizeof(double)))
      fail(Errc::CorruptHeader, path.string() + ": truncated voxel data");
    for (int64_t i = 0; i < n; ++i) v.data[i] = raw[static_cast<size_t>(i)];
  }
  v.subject_id = path.stem().string();
  return v;
}

}  // namespace

Volume load_volume(const std::filesystem::path& path, VolumeFormat format) {
  Volume v = format == VolumeFormat::RawF32 ? load_raw_f32(path) : load_nifti_like(path);
  if (!v.data.all_finite()) fail(Errc::NonFiniteData, path.string() + ": NaN/Inf voxel");
  v.value_range = {v.data.min(), v.data.max()};
  return v;
}

void save_volume_raw_f32(const Volume& v, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoFailure, "cannot write " + path.string());
  std::vector<float> raw(static_cast<size_t>(v.data.numel()));
  for (int64_t i = 0; i < v.data.numel(); ++i)
    raw[static_cast<size_t>(i)] = static_cast<float>(v.data[i]);
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size() * sizeof(float)));
  if (!out) fail(Errc::IoFailure, "short write to " + path.string());

  ordered_json meta;
  meta["shape"] = {v.d(), v.h(), v.w()};
  meta["subject"] = v.subject_id;
  meta["component"] = v.component_label;
  write_json_file(meta, path.string() + ".json");
}

std::vector<ManifestRecord> read_manifest(const std::filesystem::path& path) {
  const ordered_json j = read_json_file(path, Errc::MissingFile);
  if (!j.is_array()) fail(Errc::CorruptHeader, path.string() + ": manifest must be a JSON array");
  std::vector<ManifestRecord> records;
  for (const auto& item : j)
    records.push_back({item.at("path").get<std::string>(), item.at("subject").get<std::string>(),
                       item.at("component").get<std::string>()});
  return records;
}

void write_manifest(const std::vector<ManifestRecord>& records,
                    const std::filesystem::path& path) {
  ordered_json j = ordered_json::array();
  for (const auto& r : records)
    j.push_back({{"path", r.path}, {"subject", r.subject}, {"component", r.component}});
  write_json_file(j, path);
}

DatasetSplit read_split(const std::filesystem::path& path) {
  const ordered_json j = read_json_file(path, Errc::MissingFile);
  DatasetSplit s;
  s.seed = j.at("seed").get<uint64_t>();
  s.train_subjects = j.at("train").get<std::vector<std::string>>();
  s.val_subjects = j.at("val").get<std::vector<std::string>>();
  s.test_subjects = j.at("test").get<std::vector<std::string>>();
  return s;
}

void write_split(const DatasetSplit& split, const std::filesystem::path& path) {
  ordered_json j;
  j["seed"] = split.seed;
  j["train"] = split.train_subjects;
  j["val"] = split.val_subjects;
  j["test"] = split.test_subjects;
  write_json_file(j, path);
}

uint64_t hash_volume_bytes(const Volume& v) {
  uint64_t h = fnv1a64(v.data.data(), static_cast<size_t>(v.data.numel()) * sizeof(double));
  h = splitmix64(h ^ fnv1a64(v.subject_id));
  return splitmix64(h ^ fnv1a64(v.component_label));
}

}  // namespace ng3d
