#include "hypermorph/netpbm.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

namespace hypermorph {

std::string_view to_string(ParseErrorKind kind) noexcept {
    switch (kind) {
        case ParseErrorKind::BadMagic: return "bad magic number";
        case ParseErrorKind::BadHeader: return "bad header";
        case ParseErrorKind::DimensionOverflow: return "dimension overflow";
        case ParseErrorKind::Truncated: return "truncated payload";
        case ParseErrorKind::BadPixel: return "bad pixel value";
        case ParseErrorKind::Io: return "i/o error";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " at byte " + std::to_string(offset) + ": " + detail),
      kind_(kind),
      offset_(offset) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Reader {
public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= bytes_.size(); }
    std::size_t remaining() const { return bytes_.size() - pos_; }
    unsigned char byte_at(std::size_t i) const { return static_cast<unsigned char>(bytes_[i]); }

    /// Skips whitespace and '#' comments (to end of line).
    void skip_separators() {
        while (!at_end()) {
            const char c = bytes_[pos_];
            if (is_space(c)) {
                ++pos_;
            } else if (c == '#') {
                while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else {
                break;
            }
        }
    }

    /// Reads an unsigned decimal header field. Values above `limit` raise
    /// DimensionOverflow.
    std::size_t header_number(const char* what, std::size_t limit) {
        skip_separators();
        const auto start = pos_;
        if (at_end()) throw ParseError(ParseErrorKind::Truncated, pos_, std::string("missing ") + what);
        if (!is_digit(bytes_[pos_]))
            throw ParseError(ParseErrorKind::BadHeader, pos_, std::string("expected ") + what);
        std::size_t value = 0;
        while (!at_end() && is_digit(bytes_[pos_])) {
            value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
            if (value > limit)
                throw ParseError(ParseErrorKind::DimensionOverflow, start,
                                 std::string(what) + " exceeds " + std::to_string(limit));
            ++pos_;
        }
        if (!at_end() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#')
            throw ParseError(ParseErrorKind::BadHeader, pos_, std::string("garbage after ") + what);
        return value;
    }

    /// The single whitespace byte separating a binary raster from the header.
    void raster_separator() {
        if (at_end()) throw ParseError(ParseErrorKind::Truncated, pos_, "missing raster");
        if (!is_space(bytes_[pos_])) throw ParseError(ParseErrorKind::BadHeader, pos_, "expected whitespace");
        ++pos_;
    }

    char peek() const { return bytes_[pos_]; }
    void advance(std::size_t n = 1) { pos_ += n; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

struct Header {
    char format = 0;
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t maxval = 1;
};

Header read_header(Reader& in) {
    if (in.remaining() < 2 || in.peek() != 'P')
        throw ParseError(ParseErrorKind::BadMagic, 0, "expected P1, P2, P4 or P5");
    in.advance();
    Header hdr;
    hdr.format = in.peek();
    if (hdr.format != '1' && hdr.format != '2' && hdr.format != '4' && hdr.format != '5')
        throw ParseError(ParseErrorKind::BadMagic, 1, std::string("unsupported format P") + hdr.format);
    in.advance();
    if (!in.at_end() && !is_space(in.peek()) && in.peek() != '#')
        throw ParseError(ParseErrorKind::BadMagic, in.pos(), "magic number not followed by whitespace");

    const auto width_at = in.pos();
    hdr.width = in.header_number("width", kMaxImageSide);
    hdr.height = in.header_number("height", kMaxImageSide);
    if (hdr.width == 0 || hdr.height == 0)
        throw ParseError(ParseErrorKind::BadHeader, width_at, "zero image dimension");
    if (hdr.width * hdr.height > kMaxImagePixels)
        throw ParseError(ParseErrorKind::DimensionOverflow, width_at,
                         std::to_string(hdr.width) + "x" + std::to_string(hdr.height) + " exceeds pixel limit");
    if (hdr.format == '2' || hdr.format == '5') {
        const auto at = in.pos();
        hdr.maxval = in.header_number("maxval", 65535);
        if (hdr.maxval == 0) throw ParseError(ParseErrorKind::BadHeader, at, "maxval must be positive");
    }
    return hdr;
}

bool gray_is_foreground(std::size_t value, std::size_t maxval) { return 2 * value >= maxval; }

void decode_ascii(Reader& in, const Header& hdr, std::vector<std::uint8_t>& pixels) {
    for (auto& p : pixels) {
        in.skip_separators();
        if (in.at_end()) throw ParseError(ParseErrorKind::Truncated, in.pos(), "raster ends early");
        if (hdr.format == '1') {
            // P1 samples may be packed without separators.
            const char c = in.peek();
            if (c != '0' && c != '1')
                throw ParseError(ParseErrorKind::BadPixel, in.pos(), std::string("expected 0 or 1, got '") + c + "'");
            p = c == '1';
            in.advance();
        } else {
            const auto at = in.pos();
            std::size_t value = 0;
            if (!is_digit(in.peek())) throw ParseError(ParseErrorKind::BadPixel, at, "expected a gray sample");
            while (!in.at_end() && is_digit(in.peek())) {
                value = value * 10 + static_cast<std::size_t>(in.peek() - '0');
                if (value > hdr.maxval)
                    throw ParseError(ParseErrorKind::BadPixel, at, "sample exceeds maxval");
                in.advance();
            }
            p = gray_is_foreground(value, hdr.maxval);
        }
    }
}

void decode_binary(Reader& in, const Header& hdr, std::vector<std::uint8_t>& pixels) {
    in.raster_separator();
    if (hdr.format == '4') {
        const auto row_bytes = (hdr.width + 7) / 8;
        const auto need = row_bytes * hdr.height;
        if (in.remaining() < need)
            throw ParseError(ParseErrorKind::Truncated, in.pos() + in.remaining(),
                             "expected " + std::to_string(need) + " raster bytes, found " +
                                 std::to_string(in.remaining()));
        const auto base = in.pos();
        for (std::size_t y = 0; y < hdr.height; ++y)
            for (std::size_t x = 0; x < hdr.width; ++x) {
                const auto byte = in.byte_at(base + y * row_bytes + x / 8);
                pixels[y * hdr.width + x] = (byte >> (7 - x % 8)) & 1u;
            }
        in.advance(need);
        return;
    }
    const std::size_t sample_bytes = hdr.maxval > 255 ? 2 : 1;
    const auto need = sample_bytes * pixels.size();
    if (in.remaining() < need)
        throw ParseError(ParseErrorKind::Truncated, in.pos() + in.remaining(),
                         "expected " + std::to_string(need) + " raster bytes, found " + std::to_string(in.remaining()));
    const auto base = in.pos();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        std::size_t value = in.byte_at(base + i * sample_bytes);
        if (sample_bytes == 2) value = (value << 8) | in.byte_at(base + i * 2 + 1);
        if (value > hdr.maxval)
            throw ParseError(ParseErrorKind::BadPixel, base + i * sample_bytes, "sample exceeds maxval");
        pixels[i] = gray_is_foreground(value, hdr.maxval);
    }
    in.advance(need);
}

}  // namespace

BinaryImage decode_netpbm(std::string_view bytes) {
    Reader in(bytes);
    const auto hdr = read_header(in);
    std::vector<std::uint8_t> pixels(hdr.width * hdr.height);
    if (hdr.format == '1' || hdr.format == '2')
        decode_ascii(in, hdr, pixels);
    else
        decode_binary(in, hdr, pixels);
    return BinaryImage(hdr.width, hdr.height, std::move(pixels));
}

std::string encode_pbm(const BinaryImage& img, PbmEncoding encoding) {
    std::ostringstream out;
    const auto w = img.width();
    if (encoding == PbmEncoding::Ascii) {
        out << "P1\n" << w << ' ' << img.height() << '\n';
        for (std::size_t y = 0; y < img.height(); ++y) {
            // Netpbm caps plain-format lines at 70 characters.
            for (std::size_t x = 0; x < w; ++x) {
                out << (img.at(x, y) ? '1' : '0');
                out << ((x + 1 == w || (x + 1) % 35 == 0) ? '\n' : ' ');
            }
        }
        return out.str();
    }
    out << "P4\n" << w << ' ' << img.height() << '\n';
    std::string raster((w + 7) / 8 * img.height(), '\0');
    const auto row_bytes = (w + 7) / 8;
    for (std::size_t y = 0; y < img.height(); ++y)
        for (std::size_t x = 0; x < w; ++x)
            if (img.at(x, y))
                raster[y * row_bytes + x / 8] =
                    static_cast<char>(static_cast<unsigned char>(raster[y * row_bytes + x / 8]) | (0x80u >> (x % 8)));
    out << raster;
    return out.str();
}

BinaryImage read_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseErrorKind::Io, 0, "cannot open " + path.string() + ": " + std::strerror(errno));
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_netpbm(bytes);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::system_error(errno, std::generic_category(), "cannot create " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

void write_image(const BinaryImage& img, const std::filesystem::path& path, PbmEncoding encoding) {
    write_file_atomic(path, encode_pbm(img, encoding));
}

}  // namespace hypermorph
