#pragma once
//---------------------------------------------------------------------------
#include "tracar/simulator.hpp"
#include <filesystem>
//---------------------------------------------------------------------------
namespace tracar {
//---------------------------------------------------------------------------
// Throughput profiles persist as a versioned flat file, one record per
// sweep point. Values round-trip bit-exactly, so a saved and reloaded
// profile plans identically. Externally measured profiles can be imported
// in the same format with provenance "measured-fixture".
//
//   # tracar-profile v1
//   # technology,read_fraction,memory_fraction,faults_per_txn,tps_per_node,seed,provenance
//   3dxp,0.5,0.015,2.25,40000,42,measured-fixture
//
// Loading rejects any major version other than 1.
//---------------------------------------------------------------------------
std::string serializeProfile(const ThroughputProfile& profile);
ThroughputProfile parseProfile(const std::string& contents, const std::string& sourceName = "<memory>");
//---------------------------------------------------------------------------
void saveProfile(const ThroughputProfile& profile, const std::filesystem::path& path);
ThroughputProfile loadProfile(const std::filesystem::path& path);
//---------------------------------------------------------------------------
} // namespace tracar
