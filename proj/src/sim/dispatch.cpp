// Copyright 2026 The qcnn-reupload Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcnn/sim/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace qcnn::sim {

#if defined(QCNN_HAVE_AVX2_KERNELS)
namespace avx2 {
const KernelTable &table();
}
#endif

namespace {

bool cpu_has_avx2() {
#if defined(QCNN_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &resolve_active() {
    const char *forced = std::getenv("QCNN_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
        return scalar_kernels();
    }
    if (const KernelTable *simd = avx2_kernels()) {
        return *simd;
    }
    return scalar_kernels();
}

} // namespace

const KernelTable *avx2_kernels() {
#if defined(QCNN_HAVE_AVX2_KERNELS)
    static const bool supported = cpu_has_avx2();
    return supported ? &avx2::table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active_kernels() {
    static const KernelTable &table = resolve_active();
    return table;
}

std::vector<const KernelTable *> available_kernels() {
    std::vector<const KernelTable *> out{&scalar_kernels()};
    if (const KernelTable *simd = avx2_kernels()) {
        out.push_back(simd);
    }
    return out;
}

} // namespace qcnn::sim
