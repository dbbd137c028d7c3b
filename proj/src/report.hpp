#pragma once

#include <map>
#include <string>
#include <vector>

#include "group.hpp"

namespace vilenkin {

/// Fixed float formatting for reports: 17 significant digits, '.' separator.
/// Identical inputs must produce byte-identical files.
std::string fmt_double(double x);

/// Writes via a temporary file in the same directory plus rename, so a
/// partial report is never left at the target path.
void atomic_write_file(const std::string& path, const std::string& content);

struct ReportRow {
  std::string theorem;  // "1", "2", "3", "fejer"
  std::string f_label;  // function selector as given
  double p = 1.0;
  std::uint64_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string theorem_id;
  std::string group;
  std::string weights;
  std::vector<double> pvals;
  std::vector<std::string> functions;
  std::vector<ReportRow> rows;
  std::map<std::string, double> extras;  // e.g. cond0 diagnostics

  double max_ratio() const;
  bool rows_pass() const;
  bool all_pass() const;  // rows and any extras-encoded assertions
};

// CSV: theorem,spec,weights,p,f,n,lhs,rhs,ratio,pass
std::string report_csv(const VerificationReport& r);
std::string report_json(const VerificationReport& r);

struct KernelRow {
  std::string identity;
  std::uint64_t n = 0;
  double max_residual = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct KernelReport {
  std::string group;
  std::string weights;
  std::vector<KernelRow> rows;
  bool all_pass() const;
};

// CSV: identity,n,max_residual,bound,pass
std::string report_csv(const KernelReport& r);
std::string report_json(const KernelReport& r);

struct RateReport {
  std::string group;
  std::string weights;
  double alpha = 0.0;
  double p = 1.0;
  std::vector<std::pair<std::uint64_t, double>> errors;  // (n, err)
  double slope = 0.0;
  double r2 = 0.0;
  double target = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// CSV: n,err
std::string report_csv(const RateReport& r);

}  // namespace vilenkin
