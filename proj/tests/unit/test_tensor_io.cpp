#include "bgaug/error.hpp"
#include "bgaug/tensor_io.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cstring>

using namespace bgaug;
using namespace bgaug::testing;

namespace {

ErrorCode decode_error(const std::vector<std::uint8_t>& bytes, int kind) {
    try {
        if (kind == 0) decode_image_tensor(bytes);
        if (kind == 1) decode_mask_tensor(bytes);
        if (kind == 2) decode_triplet_tensor(bytes);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io;
}

} // namespace

TEST_SUITE("tensor_io") {

TEST_CASE("golden header for a 2x2x3 image") {
    MultiChannelImage img(2, 2, 3);
    for (std::size_t i = 0; i < img.size(); ++i) img.data()[i] = 0.125f * static_cast<float>(i);
    const auto bytes = encode_tensor(img);
    const std::vector<std::uint8_t> header{'B', 'S', 'V', 'T', 1, 0, 2, 0, 0, 0, 2, 0, 0, 0, 3, 0, 0, 0, 1, 0, 0, 0};
    REQUIRE(bytes.size() == header.size() + 12 * 4);
    CHECK(std::equal(header.begin(), header.end(), bytes.begin()));
    // 0.125f == 0x3E000000
    CHECK(bytes[22 + 4] == 0x00);
    CHECK(bytes[22 + 7] == 0x3E);
    for (std::size_t i = 0; i < 12; ++i) {
        float v;
        std::memcpy(&v, bytes.data() + 22 + 4 * i, 4);
        CHECK(v == img.data()[i]);
    }
    CHECK(peek_tensor_dtype(bytes) == TensorDtype::F32);
}

TEST_CASE("round trips") {
    RandomStream r(3);
    const auto img = random_image(r, 7, 5, 4);
    CHECK(decode_image_tensor(encode_tensor(img)) == img);
    const auto mask = random_mask(r, 6, 9);
    const auto mb = encode_tensor(mask);
    CHECK(peek_tensor_dtype(mb) == TensorDtype::U8);
    CHECK(decode_mask_tensor(mb) == mask);
    const auto t = random_triplet(r, 8, 11, 4);
    const auto tb = encode_tensor(t);
    CHECK(peek_tensor_dtype(tb) == TensorDtype::Triplet);
    CHECK(decode_triplet_tensor(tb) == t);
    const auto t3 = random_triplet(r, 3, 2, 3);
    CHECK(decode_triplet_tensor(encode_tensor(t3)) == t3);

    const auto dir = scratch_dir("tensor");
    write_tensor(dir / "t.bsvt", t);
    CHECK(read_triplet_tensor(dir / "t.bsvt") == t);
    CHECK(read_file_bytes(dir / "t.bsvt") == tb);
    write_tensor(dir / "i.bsvt", img);
    CHECK(read_image_tensor(dir / "i.bsvt") == img);
    write_tensor(dir / "m.bsvt", mask);
    CHECK(read_mask_tensor(dir / "m.bsvt") == mask);
    CHECK_THROWS_AS(read_image_tensor(dir / "absent.bsvt"), Error);
}

TEST_CASE("malformed inputs") {
    RandomStream r(4);
    const auto img = random_image(r, 3, 3, 3);
    auto bytes = encode_tensor(img);

    for (std::size_t cut : {0u, 3u, 10u, 21u, 22u, 40u}) {
        const std::vector<std::uint8_t> part(bytes.begin(), bytes.begin() + cut);
        CHECK(decode_error(part, 0) == ErrorCode::TruncatedFile);
    }
    auto bad = bytes;
    bad[0] = 'X';
    CHECK(decode_error(bad, 0) == ErrorCode::BadMagic);
    bad = bytes;
    bad[4] = 2;
    CHECK(decode_error(bad, 0) == ErrorCode::VersionUnsupported);
    CHECK(decode_error(bytes, 1) == ErrorCode::FormatMismatch);
    CHECK(decode_error(bytes, 2) == ErrorCode::FormatMismatch);
    CHECK(decode_error(encode_tensor(random_mask(r, 2, 2)), 0) == ErrorCode::FormatMismatch);

    auto tb = encode_tensor(random_triplet(r, 4, 4));
    CHECK(decode_error(tb, 0) == ErrorCode::FormatMismatch);
    const std::vector<std::uint8_t> tcut(tb.begin(), tb.end() - 1);
    CHECK(decode_error(tcut, 2) == ErrorCode::TruncatedFile);
    auto wrong_tag = tb;
    wrong_tag[26] = 'Z'; // first section tag
    CHECK(decode_error(wrong_tag, 2) == ErrorCode::FormatMismatch);

    SampleTriplet odd = random_triplet(r, 4, 4);
    odd.recent = random_image(r, 4, 5, 4);
    CHECK_THROWS_AS(encode_tensor(odd), Error);
}

} // TEST_SUITE
