#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(EINFIB_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

using Json = nlohmann::ordered_json;

TEST(Cli, EigenvaluesG2TypeI) {
  CliResult r = run("eigenvalues cpg21 --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["gamma"], Json::array({"1/2"}));
  EXPECT_EQ(j["c_kn"], "1/2");
  EXPECT_NE(r.out.find("\"1/8\""), std::string::npos);
}

TEST(Cli, SolveG2TypeIIFourDecimals) {
  CliResult r = run("solve cpg23 --format json --precision 4");
  ASSERT_EQ(r.status, 0) << r.out;
  Json j = Json::parse(r.out);
  std::vector<std::string> x1;
  for (const auto& m : j["metrics"]) x1.push_back(m["values"][0]["decimal"]);
  EXPECT_EQ(x1, (std::vector<std::string>{"0.5526", "0.7432"}));
}

TEST(Cli, VerifyCertificate) {
  CliResult ok = run("verify cpg21 --metric X=3/2");
  EXPECT_EQ(ok.status, 0) << ok.out;
  EXPECT_NE(ok.out.find("\"0\""), std::string::npos);
  CliResult bad = run("verify cpg21 --metric X=1");
  EXPECT_EQ(bad.status, 1) << bad.out;
}

TEST(Cli, DistinctErrorCodes) {
  CliResult unknown = run("solve cpx99", true);
  EXPECT_EQ(unknown.status, 3);
  EXPECT_EQ(Json::parse(unknown.out)["error"], "unknown-triple");

  CliResult domain = run("solve cpdn7 --params n=4,p=9", true);
  EXPECT_EQ(domain.status, 3);
  EXPECT_EQ(Json::parse(domain.out)["error"], "domain");

  CliResult cert = run("verify cpg21 --metric X=abc", true);
  EXPECT_EQ(cert.status, 2);
  EXPECT_EQ(Json::parse(cert.out)["error"], "malformed-certificate");

  CliResult usage = run("frobnicate", true);
  EXPECT_EQ(usage.status, 2);
}

TEST(Cli, OutputIsDeterministic) {
  CliResult a = run("solve cpe75 --params p=4 --format json");
  CliResult b = run("solve cpe75 --params p=4 --format json");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out).dump(2) + "\n", a.out);
}

TEST(Cli, CsvAndMarkdownFormats) {
  CliResult csv = run("solve cpg21 --format csv");
  ASSERT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out.rfind("metric,X,", 0), 0u);
  EXPECT_NE(csv.out.find("\n2,3/2,1.5000,"), std::string::npos);
  CliResult md = run("list --format md");
  ASSERT_EQ(md.status, 0);
  EXPECT_EQ(md.out.rfind("| ", 0), 0u);
}

TEST(Cli, TablesCommand) {
  CliResult r = run("tables tabcoxeter --format json");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(Json::parse(r.out)["status"], "pass");
  CliResult bad = run("tables tab99", true);
  EXPECT_EQ(bad.status, 2);
  EXPECT_EQ(Json::parse(bad.out)["error"], "unknown-table");
}

}  // namespace
