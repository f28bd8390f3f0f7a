#include "kernels.hpp"

namespace trinomial::detail {
namespace {

struct PortableClmul {
  static Wide mul(std::uint64_t a, std::uint64_t b) noexcept { return clmul64_portable(a, b); }
  static Wide square(std::uint64_t a) noexcept {
    return {spread32(static_cast<std::uint32_t>(a)), spread32(static_cast<std::uint32_t>(a >> 32))};
  }
};

}  // namespace

KernelSet portable_kernels() noexcept { return Kernels<PortableClmul>::set(); }

}  // namespace trinomial::detail
