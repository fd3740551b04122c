#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wheelramsey/detection.hpp"

namespace wheelramsey::app {

std::string toolchain_version();

// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view data);

// Stored claim that a coloring avoids a monochromatic pattern. Paths are
// relative to the artifact root. Every field except `created` is covered by
// the manifest's content hash.
struct Certificate {
  std::string id;
  std::string pattern;  // Pattern::name()
  int order = 0;
  int colors = 0;
  std::string coloring;
  std::string coloring_sha256;
  std::string blocks;  // empty when the coloring has no block metadata
  std::string blocks_sha256;
  std::string report;
  std::string status = "unverified";  // unverified | pass | fail
  std::string witness = "none";
  std::string method_census = "none";
  std::string toolchain;
  std::string created;

  // e.g. "no monochromatic W7, k=3"
  std::string claim() const;
  bool pass() const { return status == "pass"; }
};

// Manifest text: "key: value" lines, a content-sha256 line over everything
// above it, then the created line.
std::string encode_certificate(const Certificate& cert);
// Throws AppError(HASH_MISMATCH) when the content hash does not match.
Certificate decode_certificate(std::string_view text);

// Re-hashes the referenced coloring and block files under `root`.
void check_artifacts(const Certificate& cert, const std::filesystem::path& root);

struct CertifyRequest {
  std::string id;
  std::filesystem::path coloring;  // relative to root
  Pattern pattern = Pattern::triangle();
  VerifyOptions options;
  ReportFormat report_format = ReportFormat::Text;
};

struct Certified {
  Certificate certificate;
  DetectionReport report;
};

// Verifies the coloring and writes the report under root/reports. The
// certificate is returned, not stored; status is "pass" or "fail".
Certified certify(const std::filesystem::path& root, const CertifyRequest& request);

std::string utc_timestamp();

}  // namespace wheelramsey::app
