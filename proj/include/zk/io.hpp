#pragma once

#include <string>

#include "zk/field.hpp"

namespace zk {

// Binary field dump: 32-byte header (8-byte magic "ZKFLD001", u32 n1, u32 n2,
// f64 half-width1, f64 half-width2), then n1*n2 row-major little-endian f64.
void write_field(const std::string& path, const RealField2D& f);

// Reads the dump; the grid is reconstructed from the header.  `grid_store`
// receives the grid and must outlive the returned field.
RealField2D read_field(const std::string& path, Grid2D& grid_store);

// FNV-1a content hash of a file, used by the artifact cache.
std::uint64_t file_checksum(const std::string& path);

} // namespace zk
