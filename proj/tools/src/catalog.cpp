#include "wheelramsey/app/catalog.hpp"

#include <algorithm>
#include <set>

#include "wheelramsey/app/errors.hpp"
#include "wheelramsey/io.hpp"

namespace wheelramsey::app {

namespace fs = std::filesystem;

fs::path Catalog::certificate_path(const std::string& id) const { return root_ / "certificates" / (id + ".cert"); }

void Catalog::store(const Certificate& cert) {
  std::lock_guard lock(write_mutex_);
  write_file(certificate_path(cert.id), encode_certificate(cert));
}

std::vector<Certificate> Catalog::list() const {
  std::vector<Certificate> out;
  const fs::path dir = root_ / "certificates";
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cert")
      out.push_back(decode_certificate(read_file(entry.path())));
  std::sort(out.begin(), out.end(), [](const Certificate& a, const Certificate& b) { return a.id < b.id; });
  return out;
}

Certificate Catalog::show(const std::string& id) const {
  const fs::path file = certificate_path(id);
  if (!fs::exists(file)) throw unknown_id("no certificate '" + id + "' in " + root_.string());
  return decode_certificate(read_file(file));
}

std::vector<std::string> Catalog::gc() {
  std::lock_guard lock(write_mutex_);
  std::set<std::string> referenced;
  for (const Certificate& c : list()) {
    referenced.insert(c.coloring);
    if (!c.blocks.empty()) referenced.insert(c.blocks);
    if (!c.report.empty()) referenced.insert(c.report);
  }
  std::vector<std::string> removed;
  for (const char* sub : {"colorings", "reports"}) {
    const fs::path dir = root_ / sub;
    if (!fs::is_directory(dir)) continue;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      const std::string rel = fs::relative(entry.path(), root_).generic_string();
      if (!referenced.count(rel)) removed.push_back(rel);
    }
  }
  std::sort(removed.begin(), removed.end());
  for (const std::string& rel : removed) fs::remove(root_ / rel);
  return removed;
}

}  // namespace wheelramsey::app
