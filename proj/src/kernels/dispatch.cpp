// SPDX-License-Identifier: Apache-2.0
//
// aerialris: placement, partitioning and power planning for aerial-RIS backhaul
// Copyright (C) 2026 The aerialris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "aerialris/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <string_view>

namespace aerialris
{

namespace
{
bool cpu_has_avx2()
{
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable &select()
{
    const char *env = std::getenv("AERIALRIS_KERNELS");
    const std::string_view want = env ? env : "";
    if (want == "scalar")
        return scalar_kernels();
    if (const KernelTable *t = avx2_kernels())
        return *t;
    if (want == "avx2")
        std::fprintf(stderr, "aerialris: AVX2 kernels requested but unavailable; using scalar\n");
    return scalar_kernels();
}
} // namespace

const KernelTable *avx2_kernels()
{
#ifdef AERIALRIS_HAVE_AVX2
    static const bool ok = cpu_has_avx2();
    return ok ? detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active_kernels()
{
    static const KernelTable &t = select();
    return t;
}

const KernelTable *kernel_table(std::string_view name)
{
    if (name == "scalar")
        return &scalar_kernels();
    if (name == "avx2")
        return avx2_kernels();
    return nullptr;
}

} // namespace aerialris
