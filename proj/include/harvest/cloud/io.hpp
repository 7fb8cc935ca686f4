#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harvest/cloud/cloud.hpp"

namespace harvest {

enum class CloudFormat { PLY, PCD };

/// Loads an ASCII PLY (properties x y z red green blue) or ASCII PCD v0.7
/// (FIELDS x y z rgb, packed-float rgb) file.  Colors are normalized to
/// [0,1].  Extra fields are ignored; a `label` field, when present, is
/// returned through `labels_out`.
ColorPointCloud load_cloud(const std::string& path,
                           std::vector<std::uint8_t>* labels_out = nullptr);

/// Writes an ASCII cloud readable by load_cloud.  Positions use 6-decimal
/// fixed precision.  When `labels` is given (PCD only) a 0/1 label column
/// is appended.
void save_cloud(const ColorPointCloud& cloud, const std::string& path, CloudFormat format,
                const std::vector<std::uint8_t>* labels = nullptr);

std::uint32_t pack_rgb(const Vec3& color);
Vec3 unpack_rgb(std::uint32_t packed);

}  // namespace harvest
