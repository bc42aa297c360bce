#pragma once

#include <cstdint>
#include <string>

namespace spirits {

// Shortest decimal representation that round-trips to the same double.
std::string fmt_double(double v);

// Writes content to path via a temp file + rename; no partial files are ever
// visible at path.
void atomic_write(const std::string& path, const std::string& content);

// FNV-1a 64-bit content hash, hex-encoded; used for artifact manifests.
std::string fnv1a64_hex(const std::string& data);

} // namespace spirits
