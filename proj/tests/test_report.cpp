#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "report.hpp"

using namespace vilenkin;

TEST_CASE("fixed float formatting") {
  CHECK(fmt_double(0.1) == "0.10000000000000001");
  CHECK(fmt_double(576.0) == "576");
  CHECK(fmt_double(1.0 / 3.0) == "0.33333333333333331");
  CHECK(fmt_double(0.0) == "0");
  // identical inputs, identical bytes
  CHECK(fmt_double(921.6) == fmt_double(921.6));
}

TEST_CASE("empty reports are header-only") {
  VerificationReport r;
  r.theorem_id = "1";
  r.group = "m=2;L=3";
  r.weights = "const";
  CHECK(report_csv(r) == "theorem,spec,weights,p,f,n,lhs,rhs,ratio,pass\n");
  CHECK(r.all_pass());
  CHECK(r.max_ratio() == 0.0);

  KernelReport k;
  CHECK(report_csv(k) == "identity,n,max_residual,bound,pass\n");

  RateReport rr;
  CHECK(report_csv(rr) == "n,err\n");
}

TEST_CASE("rows serialize deterministically") {
  VerificationReport r;
  r.theorem_id = "2";
  r.group = "m=2;L=3";
  r.weights = "pow:1";
  r.rows.push_back({"2", "char:2", 1.0, 4, 0.6, 921.6, 0.6 / 921.6, true});
  r.extras["scaled_sup"] = 0.5;
  const std::string a = report_csv(r), b = report_csv(r);
  CHECK(a == b);
  CHECK(a.find("2,m=2;L=3,pow:1,1,char:2,4,") != std::string::npos);
  CHECK(a.find(",1\n") != std::string::npos);
  const std::string j = report_json(r);
  CHECK(j.find("\"scaled_sup\"") != std::string::npos);
  CHECK(j == report_json(r));
}

TEST_CASE("atomic write leaves no partial file") {
  namespace fs = std::filesystem;
  const fs::path target =
      fs::temp_directory_path() /
      ("vilenkin_report_" + std::to_string(::getpid()) + ".csv");
  atomic_write_file(target.string(), "a,b\n1,2\n");
  std::ifstream in(target);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text == "a,b\n1,2\n");
  in.close();
  fs::remove(target);

  const std::string bad = "/no/such/dir/report.csv";
  CHECK_THROWS_AS(atomic_write_file(bad, "x"), IoError);
  CHECK(!fs::exists(bad));
  CHECK(!fs::exists(bad + ".tmp"));
}
