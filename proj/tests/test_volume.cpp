// Copyright 2026 The qhed authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>

#include "qhed/errors.hpp"
#include "qhed/volume.hpp"
#include "support.hpp"

using namespace qhed;

TEST_CASE("flatten follows the fix-rightmost-read-down-columns order") {
    SUBCASE("2x2x1") {
        const Volume v({2, 2, 1}, {1.0, 2.0, 3.0, 4.0}, 0);
        // v(0,0,0)=a, v(1,0,0)=b, v(0,1,0)=c, v(1,1,0)=d
        CHECK(flatten(v) == std::vector<double>{1.0, 2.0, 3.0, 4.0});
        CHECK(v.at(0, 0, 0) == 1.0);
        CHECK(v.at(1, 0, 0) == 2.0);
        CHECK(v.at(0, 1, 0) == 3.0);
        CHECK(v.at(1, 1, 0) == 4.0);
    }

    SUBCASE("single pixel") {
        const Volume v({1, 1, 1}, {5.5}, 0);
        CHECK(flatten(v) == std::vector<double>{5.5});
    }

    SUBCASE("2x1x2") {
        const Volume v({2, 1, 2}, {1.0, 2.0, 3.0, 4.0}, 0);
        CHECK(v.at(0, 0, 0) == 1.0);
        CHECK(v.at(1, 0, 0) == 2.0);
        CHECK(v.at(0, 0, 1) == 3.0);
        CHECK(v.at(1, 0, 1) == 4.0);
    }
}

TEST_CASE("the flat index formula is a bijection for all small dims") {
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t l = 1; l <= 4; ++l) {
            for (std::size_t n = 1; n <= 4; ++n) {
                std::vector<bool> hit(m * l * n, false);
                for (std::size_t k = 0; k < n; ++k) {
                    for (std::size_t j = 0; j < l; ++j) {
                        for (std::size_t i = 0; i < m; ++i) {
                            const std::size_t flat = i + j * m + k * m * l;
                            REQUIRE(flat < hit.size());
                            REQUIRE_FALSE(hit[flat]);
                            hit[flat] = true;
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("volume validation") {
    CHECK_THROWS_AS(Volume({2, 1, 1}, {1.0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Volume({0, 1, 1}, {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(Volume({1, 1, 1}, {-1.0}, 0), std::invalid_argument);
}

TEST_CASE("text volume round trip") {
    const Volume v({2, 2, 1}, {0.25, 1.5, 0.0, 9.75}, 7);
    std::stringstream buf;
    save_volume_text(v, buf);
    const Volume back = load_volume_text(buf, "buf");
    CHECK(back.dims == v.dims);
    CHECK(back.values == v.values);
    CHECK(back.time_stamp == 7);
}

TEST_CASE("text volume parse errors carry line numbers") {
    SUBCASE("bad header") {
        std::istringstream in("2 2\n");
        CHECK_THROWS_AS(load_volume_text(in, "v.txt"), ParseError);
    }

    SUBCASE("non-numeric pixel") {
        std::istringstream in("2 1 1 0\n1 soup\n");
        try {
            load_volume_text(in, "v.txt");
            FAIL("expected ParseError");
        } catch (const ParseError &e) {
            CHECK(e.line() == 2);
        }
    }

    SUBCASE("too few values") {
        std::istringstream in("2 2 1 0\n1 2 3\n");
        CHECK_THROWS_AS(load_volume_text(in, "v.txt"), ParseError);
    }

    SUBCASE("too many values") {
        std::istringstream in("1 1 1 0\n1 2\n");
        CHECK_THROWS_AS(load_volume_text(in, "v.txt"), ParseError);
    }

    SUBCASE("negative pixel") {
        std::istringstream in("1 1 1 0\n-3\n");
        CHECK_THROWS_AS(load_volume_text(in, "v.txt"), ParseError);
    }
}

TEST_CASE("binary volume round trip") {
    auto gen = test::rng(53);
    auto values = test::random_reals(gen, 24, 0.0, 10.0);
    const Volume v({2, 3, 4}, values, 42);
    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    save_volume_binary(v, buf);
    // header: 4 x uint32 little-endian
    const std::string bytes = buf.str();
    REQUIRE(bytes.size() == 16 + 24 * 8);
    CHECK(static_cast<unsigned char>(bytes[0]) == 2);
    CHECK(static_cast<unsigned char>(bytes[4]) == 3);
    CHECK(static_cast<unsigned char>(bytes[8]) == 4);
    CHECK(static_cast<unsigned char>(bytes[12]) == 42);
    const Volume back = load_volume_binary(buf, "buf");
    CHECK(back.dims == v.dims);
    CHECK(back.values == v.values);
    CHECK(back.time_stamp == 42);
}

TEST_CASE("binary volume rejects truncated and padded files") {
    const Volume v({2, 1, 1}, {1.0, 2.0}, 0);
    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    save_volume_binary(v, buf);
    const std::string bytes = buf.str();

    std::istringstream truncated(bytes.substr(0, bytes.size() - 3),
                                 std::ios::binary);
    CHECK_THROWS_AS(load_volume_binary(truncated, "t.bin"), ParseError);

    std::istringstream padded(bytes + "x", std::ios::binary);
    CHECK_THROWS_AS(load_volume_binary(padded, "p.bin"), ParseError);
}
