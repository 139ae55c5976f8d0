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

#include "qhed/volume.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qhed/errors.hpp"

namespace qhed {

namespace {

constexpr std::size_t kMaxPixels = std::size_t{1} << 28; // 2 GiB of doubles

void read_exact(std::istream &in, char *dst, std::size_t n,
                const std::string &source, const char *what) {
    in.read(dst, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) {
        throw ParseError(source, 0, std::string("truncated file: ") + what);
    }
}

std::uint32_t read_u32_le(std::istream &in, const std::string &source,
                          const char *what) {
    unsigned char b[4];
    read_exact(in, reinterpret_cast<char *>(b), 4, source, what);
    return static_cast<std::uint32_t>(b[0]) |
           (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_u32_le(std::ostream &out, std::uint32_t v) {
    const unsigned char b[4] = {
        static_cast<unsigned char>(v & 0xFF),
        static_cast<unsigned char>((v >> 8) & 0xFF),
        static_cast<unsigned char>((v >> 16) & 0xFF),
        static_cast<unsigned char>((v >> 24) & 0xFF),
    };
    out.write(reinterpret_cast<const char *>(b), 4);
}

double f64_from_le(const unsigned char *b) {
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) {
        bits = (bits << 8) | b[i];
    }
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

void f64_to_le(double v, unsigned char *b) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int i = 0; i < 8; ++i) {
        b[i] = static_cast<unsigned char>(bits >> (8 * i));
    }
}

} // namespace

Volume::Volume(std::array<std::size_t, 3> dims_, std::vector<double> values_,
               std::int64_t time_stamp_)
    : dims(dims_), values(std::move(values_)), time_stamp(time_stamp_) {
    if (dims[0] < 1 || dims[1] < 1 || dims[2] < 1) {
        throw std::invalid_argument("Volume: dimensions must be positive");
    }
    if (dims[0] > kMaxPixels / dims[1] ||
        dims[0] * dims[1] > kMaxPixels / dims[2]) {
        throw std::invalid_argument("Volume: dimensions too large");
    }
    if (values.size() != pixel_count()) {
        throw std::invalid_argument("Volume: values must have M*L*N entries");
    }
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument(
                "Volume: pixel values must be finite and non-negative");
        }
    }
}

std::vector<double> flatten(const Volume &volume) { return volume.values; }

Volume load_volume_text(std::istream &in, const std::string &source_name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(source_name, 1, "empty volume file");
    }
    std::istringstream header(line);
    std::size_t m = 0;
    std::size_t l = 0;
    std::size_t n = 0;
    std::int64_t s = 0;
    std::string extra;
    if (!(header >> m >> l >> n >> s) || (header >> extra)) {
        throw ParseError(source_name, 1,
                         "expected header 'M L N s' with four integers");
    }
    if (m < 1 || l < 1 || n < 1) {
        throw ParseError(source_name, 1, "dimensions must be positive");
    }
    if (m > kMaxPixels || l > kMaxPixels || n > kMaxPixels ||
        m * l > kMaxPixels / n) {
        throw ParseError(source_name, 1, "dimensions too large");
    }
    const std::size_t count = m * l * n;
    std::vector<double> values;
    values.reserve(count);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string token;
        while (row >> token) {
            if (values.size() == count) {
                throw ParseError(source_name, line_no,
                                 "more values than M*L*N");
            }
            try {
                std::size_t used = 0;
                const double v = std::stod(token, &used);
                if (used != token.size()) {
                    throw std::invalid_argument(token);
                }
                values.push_back(v);
            } catch (const std::exception &) {
                throw ParseError(source_name, line_no,
                                 "invalid pixel value '" + token + "'");
            }
        }
    }
    if (values.size() != count) {
        throw ParseError(source_name, line_no,
                         "expected " + std::to_string(count) +
                             " values, got " + std::to_string(values.size()));
    }
    try {
        return {{m, l, n}, std::move(values), s};
    } catch (const std::invalid_argument &e) {
        throw ParseError(source_name, line_no, e.what());
    }
}

Volume load_volume_text(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open file");
    }
    return load_volume_text(in, path.string());
}

Volume load_volume_binary(std::istream &in, const std::string &source_name) {
    const std::uint32_t m = read_u32_le(in, source_name, "header");
    const std::uint32_t l = read_u32_le(in, source_name, "header");
    const std::uint32_t n = read_u32_le(in, source_name, "header");
    const std::uint32_t s = read_u32_le(in, source_name, "header");
    if (m < 1 || l < 1 || n < 1) {
        throw ParseError(source_name, 0, "dimensions must be positive");
    }
    const std::size_t count =
        static_cast<std::size_t>(m) * l * n;
    if (static_cast<std::size_t>(m) * l > kMaxPixels / n) {
        throw ParseError(source_name, 0, "dimensions too large");
    }
    std::vector<double> values(count);
    std::vector<unsigned char> buf(count * 8);
    read_exact(in, reinterpret_cast<char *>(buf.data()), buf.size(),
               source_name, "pixel data");
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = f64_from_le(buf.data() + 8 * i);
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw ParseError(source_name, 0, "trailing bytes after pixel data");
    }
    try {
        return {{m, l, n}, std::move(values), s};
    } catch (const std::invalid_argument &e) {
        throw ParseError(source_name, 0, e.what());
    }
}

Volume load_volume_binary(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path.string(), 0, "cannot open file");
    }
    return load_volume_binary(in, path.string());
}

void save_volume_text(const Volume &volume, std::ostream &out) {
    out << volume.dims[0] << ' ' << volume.dims[1] << ' ' << volume.dims[2]
        << ' ' << volume.time_stamp << '\n';
    char buf[40];
    for (std::size_t i = 0; i < volume.values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", volume.values[i]);
        out << buf << ((i + 1) % volume.dims[0] == 0 ? '\n' : ' ');
    }
}

void save_volume_binary(const Volume &volume, std::ostream &out) {
    if (volume.time_stamp < 0 ||
        volume.time_stamp > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument(
            "save_volume_binary: time stamp does not fit in uint32");
    }
    for (std::size_t d : volume.dims) {
        if (d > std::numeric_limits<std::uint32_t>::max()) {
            throw std::invalid_argument(
                "save_volume_binary: dimension does not fit in uint32");
        }
    }
    write_u32_le(out, static_cast<std::uint32_t>(volume.dims[0]));
    write_u32_le(out, static_cast<std::uint32_t>(volume.dims[1]));
    write_u32_le(out, static_cast<std::uint32_t>(volume.dims[2]));
    write_u32_le(out, static_cast<std::uint32_t>(volume.time_stamp));
    std::vector<unsigned char> buf(volume.values.size() * 8);
    for (std::size_t i = 0; i < volume.values.size(); ++i) {
        f64_to_le(volume.values[i], buf.data() + 8 * i);
    }
    out.write(reinterpret_cast<const char *>(buf.data()),
              static_cast<std::streamsize>(buf.size()));
}

} // namespace qhed
