#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "atype/sim/compiled.hpp"

namespace atype {

// One synchronous update over a lane-batched state buffer.
//
// The state is node-major: node v owns `words` consecutive uint64 words, and
// bit l of each word column is the state of independent lane l. A step reads
// the whole moment-t buffer and writes every non-input node's moment-t+1
// word block (input nodes are written by the driver). NAND is ~(a & b) per
// word; a delay copies. Lanes never interact, which is what makes the loop
// data-parallel.
struct StepKernel {
  const char* name;
  bool (*available)();
  void (*step)(const CompiledNet& net, const std::uint64_t* cur, std::uint64_t* next,
               std::size_t words);
};

// Bit-at-a-time reference implementation. Slow by design; the other kernels
// are equivalence-tested against it.
const StepKernel& scalar_kernel();

// Portable word-wise implementation, always available.
const StepKernel& word64_kernel();

#if defined(__x86_64__) || defined(_M_X64)
const StepKernel& avx2_kernel();
#endif

std::vector<const StepKernel*> all_kernels();

// "auto" picks the widest available kernel; otherwise a kernel name.
// Unknown or unavailable names throw.
const StepKernel& select_kernel(const std::string& name = "auto");

// select_kernel(ATYPE_KERNEL env var, or "auto"), resolved once per process.
const StepKernel& default_kernel();

}  // namespace atype
