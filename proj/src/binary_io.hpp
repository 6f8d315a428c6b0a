#pragma once

// Little-endian fixed-width encoding shared by the CSR cache and the binary
// embedding format.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <type_traits>
#include <vector>

namespace gee::detail {

template <class T>
T byteswap(T value) noexcept {
  static_assert(std::is_trivially_copyable_v<T>);
  auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
  std::reverse(bytes.begin(), bytes.end());
  return std::bit_cast<T>(bytes);
}

template <class T>
void write_le(std::ostream& out, std::span<const T> values) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size_bytes()));
  } else {
    for (T v : values) {
      T swapped = byteswap(v);
      out.write(reinterpret_cast<const char*>(&swapped), sizeof(T));
    }
  }
}

template <class T>
void write_le(std::ostream& out, T value) {
  write_le(out, std::span<const T>(&value, 1));
}

/// Returns false on a short read.
template <class T>
bool read_le(std::istream& in, std::span<T> values) {
  in.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(values.size_bytes()));
  if (static_cast<std::size_t>(in.gcount()) != values.size_bytes()) return false;
  if constexpr (std::endian::native != std::endian::little) {
    for (T& v : values) v = byteswap(v);
  }
  return true;
}

template <class T>
bool read_le(std::istream& in, T& value) {
  return read_le(in, std::span<T>(&value, 1));
}

}  // namespace gee::detail
