#pragma once

// GCPX: "GCPX" magic, u32 version (1), u32 ndims, ndims x u32 dims, then
// prod(dims) complex values as little-endian binary64 (re, im), row-major.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gale/types.hpp"

namespace gale::cli {

/// File could not be opened, read or written, or is not a valid GCPX stream.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct GcpxArray {
  std::vector<std::uint32_t> dims;
  ComplexVector data;

  std::size_t element_count() const;
};

void write_gcpx(std::ostream& out, const GcpxArray& array);
GcpxArray read_gcpx(std::istream& in);

void write_gcpx(const std::filesystem::path& path, const GcpxArray& array);
GcpxArray read_gcpx(const std::filesystem::path& path);

}  // namespace gale::cli
