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

#include "qhed/kernels.hpp"

#include <cstdlib>
#include <string_view>
#include <vector>

namespace qhed::kernels {

namespace {

const KernelTable &pick_active() {
    const char *env = std::getenv("QHED_KERNELS");
    const std::string_view want = env ? env : "";
    if (want == "scalar") {
        return scalar_kernels();
    }
    const KernelTable *avx2 = avx2_kernels();
    if (avx2 != nullptr) {
        return *avx2;
    }
    return scalar_kernels();
}

std::vector<const KernelTable *> build_available() {
    std::vector<const KernelTable *> tables{&scalar_kernels()};
    if (const KernelTable *avx2 = avx2_kernels()) {
        tables.push_back(avx2);
    }
    return tables;
}

} // namespace

const KernelTable &active_kernels() {
    static const KernelTable &table = pick_active();
    return table;
}

std::span<const KernelTable *const> available_kernels() {
    static const std::vector<const KernelTable *> tables = build_available();
    return {tables.data(), tables.size()};
}

} // namespace qhed::kernels
