#include <stdexcept>
#include <string>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include "wheelramsey/detection.hpp"

namespace wheelramsey {

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::Text;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json-lines" || text == "jsonl") return ReportFormat::JsonLines;
  throw std::invalid_argument("unknown report format " + std::string(text));
}

std::string format_census(const MethodCensus& census) {
  std::string out;
  for (const auto& [method, count] : census) {
    if (!out.empty()) out += ',';
    out += fmt::format("{}:{}", to_string(method), count);
  }
  return out.empty() ? "none" : out;
}

std::string format_witness(const Witness& witness) {
  return std::visit(
      [](const auto& w) -> std::string {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, WheelWitness>) {
          return fmt::format("color={} center={} rim={}", w.color, w.center, fmt::join(w.rim, ","));
        } else if constexpr (std::is_same_v<W, CycleWitness>) {
          return fmt::format("cycle={}", fmt::join(w.vertices, ","));
        } else {
          return fmt::format("color={} vertices={}", w.color, fmt::join(w.vertices, ","));
        }
      },
      witness);
}

std::string result_line(const DetectionReport& report) {
  return fmt::format("RESULT: {} pattern={} order={} method-census={}", report.pass() ? "PASS" : "FAIL",
                     report.pattern.name(), report.order, format_census(report.census()));
}

std::string format_report(const DetectionReport& report, ReportFormat format) {
  std::string out;
  switch (format) {
    case ReportFormat::Text: {
      out += fmt::format("pattern: {}\norder: {}\ncolors: {}\n", report.pattern.name(), report.order, report.num_colors);
      for (const ColorResult& r : report.results) {
        if (r.witness) {
          out += fmt::format("color {}: FOUND {} census={}\n", r.color, format_witness(*r.witness),
                             format_census(r.census));
        } else {
          out += fmt::format("color {}: ABSENT census={}\n", r.color, format_census(r.census));
        }
      }
      out += result_line(report) + "\n";
      break;
    }
    case ReportFormat::Csv: {
      out += "pattern,order,color,status,witness,method_census\n";
      for (const ColorResult& r : report.results) {
        out += fmt::format("{},{},{},{},\"{}\",\"{}\"\n", report.pattern.name(), report.order, r.color,
                           r.witness ? "FOUND" : "ABSENT", r.witness ? format_witness(*r.witness) : "",
                           format_census(r.census));
      }
      out += fmt::format("{},{},all,{},\"\",\"{}\"\n", report.pattern.name(), report.order,
                         report.pass() ? "PASS" : "FAIL", format_census(report.census()));
      break;
    }
    case ReportFormat::JsonLines: {
      for (const ColorResult& r : report.results) {
        nlohmann::ordered_json j;
        j["pattern"] = report.pattern.name();
        j["order"] = report.order;
        j["color"] = r.color;
        j["status"] = r.witness ? "FOUND" : "ABSENT";
        if (r.witness) j["witness"] = format_witness(*r.witness);
        j["method_census"] = format_census(r.census);
        out += j.dump() + "\n";
      }
      nlohmann::ordered_json summary;
      summary["result"] = report.pass() ? "PASS" : "FAIL";
      summary["pattern"] = report.pattern.name();
      summary["order"] = report.order;
      summary["method_census"] = format_census(report.census());
      out += summary.dump() + "\n";
      break;
    }
  }
  return out;
}

}  // namespace wheelramsey
