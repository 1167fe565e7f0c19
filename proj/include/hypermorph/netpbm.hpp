#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypermorph/image_bridge.hpp"

namespace hypermorph {

// Netpbm I/O. PBM bit 1 (black) is read as foreground = true and written
// back the same way. PGM samples are foreground when 2 * value >= maxval,
// i.e. bright pixels are the object.

enum class ParseErrorKind {
    BadMagic,
    BadHeader,
    DimensionOverflow,
    Truncated,
    BadPixel,
    Io,
};

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    /// Byte offset into the file where the problem was detected.
    std::size_t offset() const noexcept { return offset_; }

private:
    ParseErrorKind kind_;
    std::size_t offset_;
};

enum class PbmEncoding { Ascii /* P1 */, Binary /* P4 */ };

/// Largest accepted width or height, and largest accepted pixel count.
inline constexpr std::size_t kMaxImageSide = std::size_t{1} << 16;
inline constexpr std::size_t kMaxImagePixels = std::size_t{1} << 28;

/// Decodes P1, P2, P4 or P5 from an in-memory file.
BinaryImage decode_netpbm(std::string_view bytes);
std::string encode_pbm(const BinaryImage& img, PbmEncoding encoding = PbmEncoding::Binary);

BinaryImage read_image(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it into place, so a failed
/// write never leaves a partial file at `path`.
void write_image(const BinaryImage& img, const std::filesystem::path& path,
                 PbmEncoding encoding = PbmEncoding::Binary);

/// Atomic text/binary file write used by the image writer and the reports.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace hypermorph
