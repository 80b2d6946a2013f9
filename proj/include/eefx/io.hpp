#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eefx/certificates.hpp"
#include "eefx/instance.hpp"
#include "eefx/solver.hpp"
#include "eefx/verify.hpp"

namespace eefx {

inline constexpr const char* kInstanceSchema = "eefx-instance/1";
inline constexpr const char* kAllocationSchema = "eefx-allocation/1";

using Json = nlohmann::ordered_json;

// Instance files. Values are decimal strings; subsets are sorted index
// arrays; tables must list all 2^m subsets exactly once. Monotonicity of
// every valuation is checked on load. Errors raise InputError.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

struct CertificateRecord {
  int agent = 0;
  std::vector<Bundle> bundles;
  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

struct AllocationFile {
  Allocation allocation;
  std::vector<CertificateRecord> certificates;
  std::optional<Json> trace;

  friend bool operator==(const AllocationFile&, const AllocationFile&) = default;
};

Json allocation_to_json(const AllocationFile& file);
AllocationFile allocation_from_json(const Json& j);

Json trace_to_json(const SolverTrace& trace);
Json report_to_json(const FairnessReport& report, const Instance& inst);

Json bundle_to_json(Bundle b);
Bundle bundle_from_json(const Json& j, int m);

Json read_json_file(const std::filesystem::path& path);
// Writes to a sibling temporary and renames, so a failed run leaves no
// partial file behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace eefx
