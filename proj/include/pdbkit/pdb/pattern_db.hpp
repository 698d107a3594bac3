#ifndef PDBKIT_PDB_PATTERN_DB_HPP
#define PDBKIT_PDB_PATTERN_DB_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdbkit/pdb/mapping.hpp"

namespace pdbkit {

enum class PdbDomain : std::uint8_t { Tiles = 0, Hanoi = 1 };

enum class CostPolicy : std::uint8_t {
    PatternMovesOnly = 0, // additive: only operators touching pattern variables count
    AllMoves = 1,         // non-additive comparison policy
};

constexpr std::uint8_t kPdbUnreached = 0xFF;

// Flat table of exact abstract solution costs, one byte per pattern index.
struct PatternDatabase {
    PdbDomain domain = PdbDomain::Tiles;
    MappingScheme mapping;
    CostPolicy policy = CostPolicy::PatternMovesOnly;
    std::vector<std::uint8_t> pattern; // pattern variable ids (tiles / disk slots)
    std::vector<std::uint8_t> costs;

    std::uint8_t at(std::uint64_t index) const { return costs[index]; }
};

// Each load failure mode is a distinct error type.
struct PdbIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PdbBadMagic : PdbIoError {
    using PdbIoError::PdbIoError;
};
struct PdbBadVersion : PdbIoError {
    using PdbIoError::PdbIoError;
};
struct PdbTruncated : PdbIoError {
    using PdbIoError::PdbIoError;
};
struct PdbChecksumMismatch : PdbIoError {
    using PdbIoError::PdbIoError;
};

// Binary format: magic "APDB", version byte, domain tag, L, k, mapping
// variant, cost policy, pattern list, little-endian 64-bit entry count, raw
// cost bytes, trailing 64-bit FNV-1a checksum over everything before it.
void save_pdb(const PatternDatabase& db, const std::string& path);
PatternDatabase load_pdb(const std::string& path);

} // namespace pdbkit

#endif
