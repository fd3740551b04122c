#pragma once

#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

#include "wheelramsey/app/certificate.hpp"

namespace wheelramsey::app {

// Certificates live in <root>/certificates/<id>.cert; colorings, block
// sidecars and reports in <root>/colorings and <root>/reports.
class Catalog {
 public:
  explicit Catalog(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path certificate_path(const std::string& id) const;

  // Writes are serialized; safe to call from pipeline workers.
  void store(const Certificate& cert);

  // Sorted by id. Manifests are hash-checked on load.
  std::vector<Certificate> list() const;
  Certificate show(const std::string& id) const;

  // Deletes files under colorings/ and reports/ that no certificate
  // references. Returns the removed paths, relative to root.
  std::vector<std::string> gc();

 private:
  std::filesystem::path root_;
  mutable std::mutex write_mutex_;
};

}  // namespace wheelramsey::app
