#include "fraclab/kernel_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace fraclab {

static_assert(std::endian::native == std::endian::little, "kernel dump assumes a little-endian host");

namespace {
template <class T>
void put(std::ofstream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <class T>
T get(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("read_kernel: truncated header");
  return v;
}
}  // namespace

void write_kernel(const Kernel& K, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_kernel: cannot open " + path);
  os.write("FCK1", 4);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(K.n()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(K.m()));
  put<double>(os, K.gamma());
  put<std::uint32_t>(os, static_cast<std::uint32_t>(K.label().size()));
  os.write(K.label().data(), static_cast<std::streamsize>(K.label().size()));
  const RowMatrix& M = K.matrix();
  os.write(reinterpret_cast<const char*>(M.data()), static_cast<std::streamsize>(M.size() * sizeof(double)));
  if (!os) throw std::runtime_error("write_kernel: write failed for " + path);
}

Kernel read_kernel(const std::string& path, double radius) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_kernel: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "FCK1", 4) != 0) throw std::runtime_error("read_kernel: bad magic in " + path);
  const auto n = get<std::uint32_t>(is);
  const auto m = get<std::uint32_t>(is);
  const auto gamma = get<double>(is);
  const auto len = get<std::uint32_t>(is);
  std::string label(len, '\0');
  is.read(label.data(), len);
  // the header carries no diagonal policy; stored diagonal values are read as given
  Kernel K(make_grid(radius, static_cast<int>(n)), static_cast<int>(m), DiagonalPolicy::finite, gamma, label);
  RowMatrix& M = K.matrix();
  is.read(reinterpret_cast<char*>(M.data()), static_cast<std::streamsize>(M.size() * sizeof(double)));
  if (!is) throw std::runtime_error("read_kernel: truncated payload in " + path);
  return K;
}

void write_kernel_summary(const Kernel& K, const std::vector<NamedValue>& norms, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_kernel_summary: cannot open " + path);
  os << "label " << K.label() << '\n'
     << "n " << K.n() << '\n'
     << "m " << K.m() << '\n'
     << "radius " << std::setprecision(17) << K.grid().radius() << '\n'
     << "gamma " << K.gamma() << '\n'
     << "diagonal " << to_string(K.diagonal()) << '\n'
     << "tag " << to_string(K.tag()) << '\n';
  for (const auto& nv : norms) os << "norm." << nv.name << ' ' << std::setprecision(17) << nv.value << '\n';
}

}  // namespace fraclab
