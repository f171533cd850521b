#pragma once

#include "bgaug/image.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace bgaug {

// BSVT container, all integers little-endian:
//   "BSVT" | u16 version | u32 height | u32 width | u32 channels | u32 dtype | payload
// dtype 1 = f32 planes (H x W x C, channels last), 2 = u8 mask (C == 1).
// dtype 0 marks a triplet: the header is followed by u32 section count (4)
// and one 28-byte entry per section
//   char[4] tag | u32 channels | u32 dtype | u64 offset | u64 bytes
// with tags EMPT, RCNT, CURR, LABL; offsets are from the start of the file.
inline constexpr std::uint16_t kTensorVersion = 1;

enum class TensorDtype : std::uint32_t { Triplet = 0, F32 = 1, U8 = 2 };

std::vector<std::uint8_t> encode_tensor(const MultiChannelImage& img);
std::vector<std::uint8_t> encode_tensor(const ForegroundMask& mask);
std::vector<std::uint8_t> encode_tensor(const SampleTriplet& t);

/// Throw BadMagic, VersionUnsupported, TruncatedFile, or FormatMismatch when the
/// payload holds a different kind.
MultiChannelImage decode_image_tensor(const std::vector<std::uint8_t>& bytes);
ForegroundMask decode_mask_tensor(const std::vector<std::uint8_t>& bytes);
SampleTriplet decode_triplet_tensor(const std::vector<std::uint8_t>& bytes);
/// Dtype field of a well-formed header.
TensorDtype peek_tensor_dtype(const std::vector<std::uint8_t>& bytes);

void write_tensor(const std::filesystem::path& path, const MultiChannelImage& img);
void write_tensor(const std::filesystem::path& path, const ForegroundMask& mask);
void write_tensor(const std::filesystem::path& path, const SampleTriplet& t);
MultiChannelImage read_image_tensor(const std::filesystem::path& path);
ForegroundMask read_mask_tensor(const std::filesystem::path& path);
SampleTriplet read_triplet_tensor(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

} // namespace bgaug
