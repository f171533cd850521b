#include "bgaug/tensor_io.hpp"

#include "bgaug/error.hpp"

#include <fmt/format.h>

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <limits>

namespace bgaug {

namespace {

constexpr std::array<char, 4> kMagic{'B', 'S', 'V', 'T'};
constexpr std::size_t kHeaderBytes = 4 + 2 + 4 * 4;
constexpr std::size_t kEntryBytes = 4 + 4 + 4 + 8 + 8;

class Writer {
public:
    void raw(const void* p, std::size_t n) {
        const auto* b = static_cast<const std::uint8_t*>(p);
        out.insert(out.end(), b, b + n);
    }
    template <class T>
    void le(T v) {
        for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void f32(std::span<const float> v) {
        for (float x : v) le(std::bit_cast<std::uint32_t>(x));
    }
    std::vector<std::uint8_t> out;
};

class Reader {
public:
    Reader(const std::vector<std::uint8_t>& b, std::size_t pos = 0) : bytes(b), at(pos) {}
    void need(std::size_t n) const {
        if (at > bytes.size() || bytes.size() - at < n)
            throw Error(ErrorCode::TruncatedFile,
                        fmt::format("need {} bytes at offset {}, file has {}", n, at, bytes.size()));
    }
    template <class T>
    T le() {
        need(sizeof(T));
        T v = 0;
        for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(static_cast<T>(bytes[at + i]) << (8 * i));
        at += sizeof(T);
        return v;
    }
    const std::vector<std::uint8_t>& bytes;
    std::size_t at;
};

struct Header {
    std::uint32_t height, width, channels;
    TensorDtype dtype;
};

std::uint32_t narrow32(std::size_t v) {
    if (v > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorCode::InvalidArgument, "dimension does not fit the container");
    return static_cast<std::uint32_t>(v);
}

void put_header(Writer& w, std::size_t h, std::size_t wd, std::size_t c, TensorDtype dtype) {
    w.raw(kMagic.data(), kMagic.size());
    w.le<std::uint16_t>(kTensorVersion);
    w.le(narrow32(h));
    w.le(narrow32(wd));
    w.le(narrow32(c));
    w.le(static_cast<std::uint32_t>(dtype));
}

Header get_header(Reader& r) {
    r.need(4);
    if (std::memcmp(r.bytes.data(), kMagic.data(), 4) != 0) throw Error(ErrorCode::BadMagic, "not a BSVT file");
    r.at = 4;
    const auto version = r.le<std::uint16_t>();
    if (version != kTensorVersion)
        throw Error(ErrorCode::VersionUnsupported, fmt::format("BSVT version {} (supported: {})", version, kTensorVersion));
    Header h{};
    h.height = r.le<std::uint32_t>();
    h.width = r.le<std::uint32_t>();
    h.channels = r.le<std::uint32_t>();
    const auto dtype = r.le<std::uint32_t>();
    if (dtype > 2) throw Error(ErrorCode::FormatMismatch, fmt::format("unknown dtype {}", dtype));
    h.dtype = static_cast<TensorDtype>(dtype);
    return h;
}

std::size_t plane_bytes(std::size_t h, std::size_t w, std::size_t c, TensorDtype dtype) {
    const std::size_t elems = h * w * c;
    return dtype == TensorDtype::F32 ? elems * 4 : elems;
}

MultiChannelImage read_f32(Reader& r, std::size_t h, std::size_t w, std::size_t c) {
    r.need(h * w * c * 4);
    std::vector<float> data(h * w * c);
    for (auto& v : data) v = std::bit_cast<float>(r.le<std::uint32_t>());
    return MultiChannelImage(h, w, c, std::move(data));
}

ForegroundMask read_u8(Reader& r, std::size_t h, std::size_t w) {
    r.need(h * w);
    const auto first = r.bytes.begin() + static_cast<std::ptrdiff_t>(r.at);
    std::vector<std::uint8_t> data(first, first + static_cast<std::ptrdiff_t>(h * w));
    r.at += h * w;
    return ForegroundMask(h, w, std::move(data));
}

void expect(const Header& h, TensorDtype want) {
    if (h.dtype != want)
        throw Error(ErrorCode::FormatMismatch, fmt::format("container holds dtype {}, expected {}",
                                                           static_cast<unsigned>(h.dtype), static_cast<unsigned>(want)));
}

struct Section {
    std::array<char, 4> tag;
    std::uint32_t channels;
    TensorDtype dtype;
};

} // namespace

std::vector<std::uint8_t> encode_tensor(const MultiChannelImage& img) {
    Writer w;
    put_header(w, img.height(), img.width(), img.channels(), TensorDtype::F32);
    w.f32(img.data());
    return std::move(w.out);
}

std::vector<std::uint8_t> encode_tensor(const ForegroundMask& mask) {
    Writer w;
    put_header(w, mask.height(), mask.width(), 1, TensorDtype::U8);
    w.raw(mask.data().data(), mask.size());
    return std::move(w.out);
}

std::vector<std::uint8_t> encode_tensor(const SampleTriplet& t) {
    const std::size_t h = t.height(), wd = t.width();
    for (const auto* img : {&t.empty, &t.recent})
        if (img->height() != h || img->width() != wd)
            throw Error(ErrorCode::DimensionMismatch, "triplet planes differ in size");
    if (t.label.height() != h || t.label.width() != wd)
        throw Error(ErrorCode::DimensionMismatch, "triplet label differs in size");
    const std::array<Section, 4> sections{{
        {{'E', 'M', 'P', 'T'}, narrow32(t.empty.channels()), TensorDtype::F32},
        {{'R', 'C', 'N', 'T'}, narrow32(t.recent.channels()), TensorDtype::F32},
        {{'C', 'U', 'R', 'R'}, narrow32(t.current.channels()), TensorDtype::F32},
        {{'L', 'A', 'B', 'L'}, 1, TensorDtype::U8},
    }};
    Writer w;
    put_header(w, h, wd, t.channels(), TensorDtype::Triplet);
    w.le<std::uint32_t>(sections.size());
    std::uint64_t offset = kHeaderBytes + 4 + kEntryBytes * sections.size();
    for (const auto& s : sections) {
        const std::uint64_t bytes = plane_bytes(h, wd, s.channels, s.dtype);
        w.raw(s.tag.data(), 4);
        w.le(s.channels);
        w.le(static_cast<std::uint32_t>(s.dtype));
        w.le(offset);
        w.le(bytes);
        offset += bytes;
    }
    w.f32(t.empty.data());
    w.f32(t.recent.data());
    w.f32(t.current.data());
    w.raw(t.label.data().data(), t.label.size());
    return std::move(w.out);
}

TensorDtype peek_tensor_dtype(const std::vector<std::uint8_t>& bytes) {
    Reader r(bytes);
    return get_header(r).dtype;
}

MultiChannelImage decode_image_tensor(const std::vector<std::uint8_t>& bytes) {
    Reader r(bytes);
    const Header h = get_header(r);
    expect(h, TensorDtype::F32);
    return read_f32(r, h.height, h.width, h.channels);
}

ForegroundMask decode_mask_tensor(const std::vector<std::uint8_t>& bytes) {
    Reader r(bytes);
    const Header h = get_header(r);
    expect(h, TensorDtype::U8);
    if (h.channels != 1) throw Error(ErrorCode::FormatMismatch, "mask container must have one channel");
    return read_u8(r, h.height, h.width);
}

SampleTriplet decode_triplet_tensor(const std::vector<std::uint8_t>& bytes) {
    Reader r(bytes);
    const Header h = get_header(r);
    expect(h, TensorDtype::Triplet);
    const auto count = r.le<std::uint32_t>();
    static constexpr std::array<std::array<char, 4>, 4> kTags{
        {{'E', 'M', 'P', 'T'}, {'R', 'C', 'N', 'T'}, {'C', 'U', 'R', 'R'}, {'L', 'A', 'B', 'L'}}};
    if (count != kTags.size()) throw Error(ErrorCode::FormatMismatch, fmt::format("{} sections, expected 4", count));

    SampleTriplet t;
    std::array<MultiChannelImage*, 3> planes{&t.empty, &t.recent, &t.current};
    for (std::size_t i = 0; i < kTags.size(); ++i) {
        r.need(4);
        if (std::memcmp(bytes.data() + r.at, kTags[i].data(), 4) != 0)
            throw Error(ErrorCode::FormatMismatch, fmt::format("section {} has an unexpected tag", i));
        r.at += 4;
        const auto channels = r.le<std::uint32_t>();
        const auto dtype = r.le<std::uint32_t>();
        const auto offset = r.le<std::uint64_t>();
        const auto nbytes = r.le<std::uint64_t>();
        const auto want_dtype = i < 3 ? TensorDtype::F32 : TensorDtype::U8;
        if (dtype != static_cast<std::uint32_t>(want_dtype) || (i == 3 && channels != 1))
            throw Error(ErrorCode::FormatMismatch, fmt::format("section {} has dtype {} / {} channels", i, dtype, channels));
        if (nbytes != plane_bytes(h.height, h.width, channels, want_dtype))
            throw Error(ErrorCode::FormatMismatch, fmt::format("section {} byte count {} disagrees with its shape", i, nbytes));
        if (offset > bytes.size()) throw Error(ErrorCode::TruncatedFile, fmt::format("section {} starts past end", i));
        Reader body(bytes, static_cast<std::size_t>(offset));
        if (i < 3) *planes[i] = read_f32(body, h.height, h.width, channels);
        else t.label = read_u8(body, h.height, h.width);
    }
    return t;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::MissingFile, "cannot open " + path.string());
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(ErrorCode::Io, "short write to " + path.string());
}

void write_tensor(const std::filesystem::path& path, const MultiChannelImage& img) {
    write_file_bytes(path, encode_tensor(img));
}
void write_tensor(const std::filesystem::path& path, const ForegroundMask& mask) {
    write_file_bytes(path, encode_tensor(mask));
}
void write_tensor(const std::filesystem::path& path, const SampleTriplet& t) {
    write_file_bytes(path, encode_tensor(t));
}
MultiChannelImage read_image_tensor(const std::filesystem::path& path) {
    return decode_image_tensor(read_file_bytes(path));
}
ForegroundMask read_mask_tensor(const std::filesystem::path& path) { return decode_mask_tensor(read_file_bytes(path)); }
SampleTriplet read_triplet_tensor(const std::filesystem::path& path) {
    return decode_triplet_tensor(read_file_bytes(path));
}

} // namespace bgaug
