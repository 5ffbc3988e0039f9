#pragma once

#include "gkdv/kernels.hpp"

namespace gkdv::kernels::detail {

// Defined in avx2.cpp, which is the only translation unit compiled with -mavx2.
const KernelTable* avx2_table_impl();

}  // namespace gkdv::kernels::detail
