#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bolab/equation.hpp"

namespace bolab {

// Binary field snapshots ("BOFS"): little-endian, bit-exact round trip.
//   magic   "BOFS"   4 bytes
//   version u32      = 1
//   n       u64      sample count
//   length  f64      torus period
//   t       f64      simulation time
//   samples n x f64
// Malformed input raises ValidationError with a distinct message per failure:
// wrong magic ("not a snapshot"), unknown version, or short data ("truncated
// snapshot").
std::vector<std::uint8_t> snapshot_bytes(const SimState& state);
SimState snapshot_from_bytes(const std::vector<std::uint8_t>& bytes);

void write_snapshot(const std::string& path, const SimState& state);
SimState read_snapshot(const std::string& path);

} // namespace bolab
