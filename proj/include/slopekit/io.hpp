#pragma once

#include <string>
#include <vector>

#include "slopekit/core.hpp"
#include "slopekit/machine.hpp"
#include "slopekit/periodicity.hpp"
#include "slopekit/wang.hpp"

namespace slopekit {

// Text formats share one shape: a "slopekit-<kind> v1" header line, one record
// per line, '#' comments, blank lines ignored. Parsers throw ParseError with
// the offending 1-based line number.

// alphabet/forbid sections, or a wang section (never both in one file).
// Feature-space systems add features/tile/rule sections; rule notes survive
// only as comments.
TilingSystem parse_tileset(const std::string& text);
std::string write_tileset(const TilingSystem& sys);
std::string write_wang_tileset(const WangSystem& w);

TuringMachine parse_tm(const std::string& text);
std::string write_tm(const TuringMachine& m);

// Witness files keep the tile names next to the walk so they stand alone.
struct WitnessFile {
  std::vector<std::string> alphabet;
  PeriodicWitness witness;
};
WitnessFile parse_witness(const std::string& text);
std::string write_witness(const std::vector<std::string>& alphabet, const PeriodicWitness& w);

struct PatchFile {
  std::vector<std::string> alphabet;
  Patch patch;
};
PatchFile parse_patch(const std::string& text);
std::string write_patch(const std::vector<std::string>& alphabet, const Patch& patch);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace slopekit
