#include "wheelramsey/app/certificate.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <openssl/evp.h>

#include "wheelramsey/app/errors.hpp"
#include "wheelramsey/app/operations.hpp"
#include "wheelramsey/io.hpp"

namespace wheelramsey::app {

namespace fs = std::filesystem;

std::string toolchain_version() { return "wheelramsey " WHEELRAMSEY_VERSION; }

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

std::string Certificate::claim() const {
  std::string what = pattern;
  if (pattern.starts_with("wheel(")) what = "W" + pattern.substr(6, pattern.size() - 7);
  return fmt::format("no monochromatic {}, k={}", what, colors);
}

namespace {

std::string content_lines(const Certificate& c) {
  std::string out;
  auto line = [&](std::string_view key, const auto& value) { out += fmt::format("{}: {}\n", key, value); };
  line("certificate", c.id);
  line("claim", c.claim());
  line("pattern", c.pattern);
  line("order", c.order);
  line("colors", c.colors);
  line("coloring", c.coloring);
  line("coloring-sha256", c.coloring_sha256);
  line("blocks", c.blocks.empty() ? "none" : c.blocks);
  line("blocks-sha256", c.blocks_sha256.empty() ? "none" : c.blocks_sha256);
  line("report", c.report.empty() ? "none" : c.report);
  line("status", c.status);
  line("witness", c.witness);
  line("method-census", c.method_census);
  line("toolchain", c.toolchain);
  return out;
}

std::string none_to_empty(const std::string& s) { return s == "none" ? std::string() : s; }

}  // namespace

std::string encode_certificate(const Certificate& cert) {
  const std::string body = content_lines(cert);
  return body + fmt::format("content-sha256: {}\ncreated: {}\n", sha256_hex(body), cert.created);
}

Certificate decode_certificate(std::string_view text) {
  std::map<std::string, std::string> fields;
  std::string body;
  std::string recorded_hash;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    const auto colon = line.find(": ");
    if (colon == std::string::npos) {
      if (line.empty()) continue;
      throw FormatError("malformed certificate line: " + line);
    }
    const std::string key = line.substr(0, colon), value = line.substr(colon + 2);
    if (key == "content-sha256") {
      recorded_hash = value;
    } else if (key == "created") {
      fields[key] = value;
    } else {
      if (!recorded_hash.empty()) throw FormatError("certificate field after content hash: " + key);
      body += line + "\n";
      fields[key] = value;
    }
  }
  auto get = [&](const std::string& key) {
    auto it = fields.find(key);
    if (it == fields.end()) throw FormatError("certificate is missing field '" + key + "'");
    return it->second;
  };
  Certificate c;
  c.id = get("certificate");
  if (recorded_hash.empty()) throw FormatError("certificate " + c.id + " has no content-sha256 line");
  if (sha256_hex(body) != recorded_hash)
    throw hash_mismatch("certificate " + c.id + ": manifest content does not match content-sha256");
  c.pattern = get("pattern");
  c.order = std::stoi(get("order"));
  c.colors = std::stoi(get("colors"));
  c.coloring = get("coloring");
  c.coloring_sha256 = get("coloring-sha256");
  c.blocks = none_to_empty(get("blocks"));
  c.blocks_sha256 = none_to_empty(get("blocks-sha256"));
  c.report = none_to_empty(get("report"));
  c.status = get("status");
  c.witness = get("witness");
  c.method_census = get("method-census");
  c.toolchain = get("toolchain");
  c.created = fields.count("created") ? fields["created"] : "";
  if (get("claim") != c.claim()) throw FormatError("certificate " + c.id + ": claim does not match pattern/colors");
  return c;
}

void check_artifacts(const Certificate& cert, const fs::path& root) {
  auto check = [&](const std::string& rel, const std::string& expected) {
    const fs::path file = root / rel;
    if (!fs::exists(file)) throw missing_input("certificate " + cert.id + " references missing file " + rel);
    const std::string actual = sha256_hex(read_file(file));
    if (actual != expected)
      throw hash_mismatch(fmt::format("certificate {} file={} expected={} actual={}", cert.id, rel, expected, actual));
  };
  check(cert.coloring, cert.coloring_sha256);
  if (!cert.blocks.empty()) check(cert.blocks, cert.blocks_sha256);
}

std::string utc_timestamp() {
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now())));
}

Certified certify(const fs::path& root, const CertifyRequest& request) {
  const fs::path coloring_file = root / request.coloring;
  if (!fs::exists(coloring_file)) throw missing_input("coloring file " + coloring_file.string() + " does not exist");
  const std::string coloring_text = read_file(coloring_file);
  const EdgeColoring coloring = decode_coloring(coloring_text);

  Certified out;
  out.report = verify_pattern_free(coloring, request.pattern, request.options);
  if (!revalidate(coloring, out.report)) throw std::logic_error("detector produced a witness that does not re-validate");

  Certificate& c = out.certificate;
  c.id = request.id;
  c.pattern = request.pattern.name();
  c.order = coloring.order();
  c.colors = coloring.num_colors();
  c.coloring = request.coloring.generic_string();
  c.coloring_sha256 = sha256_hex(coloring_text);
  const fs::path blocks_rel = blocks_sidecar(request.coloring);
  if (fs::exists(root / blocks_rel)) {
    c.blocks = blocks_rel.generic_string();
    c.blocks_sha256 = sha256_hex(read_file(root / blocks_rel));
  }
  const char* extension = request.report_format == ReportFormat::Csv         ? ".csv"
                          : request.report_format == ReportFormat::JsonLines ? ".jsonl"
                                                                             : ".txt";
  const fs::path report_rel = fs::path("reports") / (request.id + ".report" + extension);
  write_file(root / report_rel, format_report(out.report, request.report_format));
  c.report = report_rel.generic_string();
  c.status = out.report.pass() ? "pass" : "fail";
  for (const ColorResult& r : out.report.results) {
    if (r.witness) {
      c.witness = format_witness(*r.witness);
      break;
    }
  }
  c.method_census = format_census(out.report.census());
  c.toolchain = toolchain_version();
  c.created = utc_timestamp();
  return out;
}

}  // namespace wheelramsey::app
