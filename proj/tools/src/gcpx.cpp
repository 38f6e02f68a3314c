#include "gale/cli/gcpx.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace gale::cli {
namespace {

constexpr std::array<char, 4> kMagic{'G', 'C', 'P', 'X'};
constexpr std::uint32_t kVersion = 1;

static_assert(std::endian::native == std::endian::little,
              "GCPX I/O assumes a little-endian host");

void put_u32(std::ostream& out, std::uint32_t v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t get_u32(std::istream& in, const char* what) {
  std::uint32_t v = 0;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) {
    throw IoError(std::string("GCPX: truncated header (") + what + ")");
  }
  return v;
}

}  // namespace

std::size_t GcpxArray::element_count() const {
  std::size_t count = 1;
  for (auto d : dims) count *= d;
  return count;
}

void write_gcpx(std::ostream& out, const GcpxArray& array) {
  if (array.data.size() != array.element_count()) {
    throw IoError("GCPX: payload size does not match dims");
  }
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(array.dims.size()));
  for (auto d : array.dims) put_u32(out, d);
  // std::complex<double> is layout-compatible with double[2].
  out.write(reinterpret_cast<const char*>(array.data.data()),
            static_cast<std::streamsize>(array.data.size() * sizeof(Complex)));
  if (!out) throw IoError("GCPX: write failed");
}

GcpxArray read_gcpx(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw IoError("GCPX: bad magic (expected \"GCPX\")");
  }
  const auto version = get_u32(in, "version");
  if (version != kVersion) {
    throw IoError("GCPX: unsupported version " + std::to_string(version));
  }
  const auto ndims = get_u32(in, "ndims");
  if (ndims > 16) throw IoError("GCPX: implausible ndims " + std::to_string(ndims));
  GcpxArray array;
  array.dims.resize(ndims);
  for (auto& d : array.dims) d = get_u32(in, "dims");
  array.data.resize(array.element_count());
  const auto bytes = static_cast<std::streamsize>(array.data.size() * sizeof(Complex));
  if (!in.read(reinterpret_cast<char*>(array.data.data()), bytes)) {
    throw IoError("GCPX: payload shorter than 16 * prod(dims) bytes");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw IoError("GCPX: trailing bytes after payload");
  }
  return array;
}

void write_gcpx(const std::filesystem::path& path, const GcpxArray& array) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_gcpx(out, array);
}

GcpxArray read_gcpx(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_gcpx(in);
}

}  // namespace gale::cli
