#pragma once

#include <utility>

#include "fftsim/numeric_kernel.hpp"

namespace fftsim {

// Radix-2 butterfly: one simulated clock cycle, two outputs.
//   t        = w * b_even
//   out_odd  = a_odd + t
//   out_even = a_odd - t
// With the kernel's scale-by-half enabled both outputs are halved before
// write-back.
template <typename Kernel>
std::pair<typename Kernel::value_type, typename Kernel::value_type>
butterfly_exec(const Kernel& kernel, const typename Kernel::value_type& a_odd,
               const typename Kernel::value_type& b_even,
               const typename Kernel::value_type& w, OverflowFlag& flag) {
    const auto t = kernel.mul_with(w, b_even, flag);
    return kernel.combine(a_odd, t, flag);
}

template <typename Kernel>
std::pair<typename Kernel::value_type, typename Kernel::value_type>
butterfly_exec(Kernel& kernel, const typename Kernel::value_type& a_odd,
               const typename Kernel::value_type& b_even,
               const typename Kernel::value_type& w) {
    OverflowFlag local;
    auto out = butterfly_exec(static_cast<const Kernel&>(kernel), a_odd, b_even, w, local);
    kernel.note_overflow(local.value);
    return out;
}

} // namespace fftsim
