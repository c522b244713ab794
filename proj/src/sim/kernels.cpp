#include "atype/sim/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace atype {

namespace {

bool always_available() { return true; }

void scalar_step(const CompiledNet& net, const std::uint64_t* cur, std::uint64_t* next,
                 std::size_t words) {
  const std::size_t lanes = words * 64;
  for (const CompiledNet::Op& op : net.ops) {
    const std::uint64_t* a = cur + static_cast<std::size_t>(op.a) * words;
    const std::uint64_t* b = cur + static_cast<std::size_t>(op.b) * words;
    std::uint64_t* d = next + static_cast<std::size_t>(op.dst) * words;
    for (std::size_t l = 0; l < lanes; ++l) {
      const std::size_t w = l >> 6;
      const std::uint64_t m = 1ull << (l & 63);
      bool bit;
      if (op.is_delay) {
        bit = (a[w] & m) != 0;
      } else {
        bit = !((a[w] & m) != 0 && (b[w] & m) != 0);
      }
      if (bit) d[w] |= m;
      else d[w] &= ~m;
    }
  }
}

void word64_step(const CompiledNet& net, const std::uint64_t* cur, std::uint64_t* next,
                 std::size_t words) {
  for (const CompiledNet::Op& op : net.ops) {
    const std::uint64_t* a = cur + static_cast<std::size_t>(op.a) * words;
    const std::uint64_t* b = cur + static_cast<std::size_t>(op.b) * words;
    std::uint64_t* d = next + static_cast<std::size_t>(op.dst) * words;
    if (op.is_delay) {
      for (std::size_t w = 0; w < words; ++w) d[w] = a[w];
    } else {
      for (std::size_t w = 0; w < words; ++w) d[w] = ~(a[w] & b[w]);
    }
  }
}

}  // namespace

const StepKernel& scalar_kernel() {
  static const StepKernel k{"scalar", always_available, scalar_step};
  return k;
}

const StepKernel& word64_kernel() {
  static const StepKernel k{"word64", always_available, word64_step};
  return k;
}

std::vector<const StepKernel*> all_kernels() {
  std::vector<const StepKernel*> ks{&scalar_kernel(), &word64_kernel()};
#if defined(__x86_64__) || defined(_M_X64)
  ks.push_back(&avx2_kernel());
#endif
  return ks;
}

const StepKernel& select_kernel(const std::string& name) {
  if (name == "auto" || name.empty()) {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_kernel().available()) return avx2_kernel();
#endif
    return word64_kernel();
  }
  for (const StepKernel* k : all_kernels()) {
    if (name == k->name) {
      if (!k->available())
        throw std::runtime_error("kernel '" + name + "' not available on this cpu");
      return *k;
    }
  }
  throw std::runtime_error("unknown kernel '" + name + "'");
}

const StepKernel& default_kernel() {
  static const StepKernel* k = [] {
    const char* env = std::getenv("ATYPE_KERNEL");
    return &select_kernel(env ? env : "auto");
  }();
  return *k;
}

}  // namespace atype
