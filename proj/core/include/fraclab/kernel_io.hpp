#pragma once

#include <string>
#include <vector>

#include "fraclab/kernel.hpp"

namespace fraclab {

// Binary layout, little endian:
//   char[4] "FCK1" | u32 n | u32 m | f64 gamma | u32 label_len | label bytes |
//   (n m)^2 f64 values, row-major over the (nm x nm) block matrix.
void write_kernel(const Kernel& K, const std::string& path);
Kernel read_kernel(const std::string& path, double radius);

struct NamedValue {
  std::string name;
  double value;
};

// Plain text summary: label, shape, diagonal policy and the given norms.
void write_kernel_summary(const Kernel& K, const std::vector<NamedValue>& norms,
                          const std::string& path);

}  // namespace fraclab
