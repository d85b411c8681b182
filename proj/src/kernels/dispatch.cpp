#include <cstdlib>
#include <cstring>

#include "nclaw/kernels.hpp"

namespace nclaw::kernels {

const Ops& active_ops() {
  static const Ops* chosen = [] {
    const char* env = std::getenv("NCLAW_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return &scalar_ops();
    const Ops* simd = avx2_ops();
    if (env && std::strcmp(env, "avx2") == 0 && simd) return simd;
    if (env && env[0] != '\0' && std::strcmp(env, "avx2") != 0 &&
        std::strcmp(env, "scalar") != 0)
      return &scalar_ops();  // unknown value: safest choice
    return simd ? simd : &scalar_ops();
  }();
  return *chosen;
}

}  // namespace nclaw::kernels
