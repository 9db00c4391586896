#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace celltrace {

/// Lowercase hex SHA-256 of a file's bytes. Throws Error(FileError).
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_bytes(std::string_view bytes);

struct ArtifactRef {
  std::string path;  // relative to the manifest's base directory
  std::string sha256;
};

/// Provenance record written next to every command's outputs. Inputs list
/// raw files and upstream manifests, so manifests chain back to the raw
/// inputs.
struct Manifest {
  std::string command;
  std::string tool_version;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> parameters;  // sorted by key
  std::vector<ArtifactRef> inputs;
  std::vector<ArtifactRef> outputs;

  void write(const std::filesystem::path& path) const;
  /// Throws Error(PipelineOrderError) when the manifest does not exist.
  static Manifest read(const std::filesystem::path& path);
};

/// Path of `p` relative to `base` when possible, with forward slashes.
std::string relative_to(const std::filesystem::path& p, const std::filesystem::path& base);

}  // namespace celltrace
