#include "report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace vilenkin {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("failed renaming report into place at '" + path + "'");
  }
}

double VerificationReport::max_ratio() const {
  double m = 0.0;
  for (const ReportRow& r : rows) m = std::max(m, r.ratio);
  return m;
}

bool VerificationReport::rows_pass() const {
  for (const ReportRow& r : rows)
    if (!r.pass) return false;
  return true;
}

bool VerificationReport::all_pass() const {
  if (!rows_pass()) return false;
  auto it = extras.find("scaled_pass");
  if (it != extras.end() && it->second == 0.0) return false;
  return true;
}

std::string report_csv(const VerificationReport& r) {
  std::string out = "theorem,spec,weights,p,f,n,lhs,rhs,ratio,pass\n";
  for (const ReportRow& row : r.rows) {
    out += row.theorem;
    out += ',' + r.group + ',' + r.weights + ',' + fmt_double(row.p) + ',' +
           row.f_label + ',' + std::to_string(row.n) + ',' +
           fmt_double(row.lhs) + ',' + fmt_double(row.rhs) + ',' +
           fmt_double(row.ratio) + ',' + (row.pass ? "1" : "0") + '\n';
  }
  return out;
}

std::string report_json(const VerificationReport& r) {
  nlohmann::json j;
  j["config"] = {{"theorem", r.theorem_id},
                 {"group", r.group},
                 {"weights", r.weights},
                 {"p", r.pvals},
                 {"f", r.functions}};
  j["max_ratio"] = r.max_ratio();
  j["all_pass"] = r.all_pass();
  if (!r.extras.empty()) j["extras"] = r.extras;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const ReportRow& row : r.rows) {
    rows.push_back({{"theorem", row.theorem},
                    {"p", row.p},
                    {"f", row.f_label},
                    {"n", row.n},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"ratio", row.ratio},
                    {"pass", row.pass}});
  }
  return j.dump(2) + "\n";
}

bool KernelReport::all_pass() const {
  for (const KernelRow& r : rows)
    if (!r.pass) return false;
  return true;
}

std::string report_csv(const KernelReport& r) {
  std::string out = "identity,n,max_residual,bound,pass\n";
  for (const KernelRow& row : r.rows) {
    out += row.identity + ',' + std::to_string(row.n) + ',' +
           fmt_double(row.max_residual) + ',' + fmt_double(row.bound) + ',' +
           (row.pass ? "1" : "0") + '\n';
  }
  return out;
}

std::string report_json(const KernelReport& r) {
  nlohmann::json j;
  j["config"] = {{"group", r.group}, {"weights", r.weights}};
  j["all_pass"] = r.all_pass();
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const KernelRow& row : r.rows) {
    rows.push_back({{"identity", row.identity},
                    {"n", row.n},
                    {"max_residual", row.max_residual},
                    {"bound", row.bound},
                    {"pass", row.pass}});
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const RateReport& r) {
  std::string out = "n,err\n";
  for (const auto& [n, err] : r.errors)
    out += std::to_string(n) + ',' + fmt_double(err) + '\n';
  return out;
}

}  // namespace vilenkin
