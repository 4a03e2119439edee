// End-to-end checks of the command-line interface: exit codes, JSON shape,
// witness round-trips, and byte stability.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef GLNZ_CLI_PATH
#error "GLNZ_CLI_PATH must point at the built binary"
#endif

namespace {

using json = nlohmann::json;

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (!stdin_data.empty()) {
    cmd = "printf '%b' \"" + stdin_data + "\" | ";
  }
  cmd += std::string(GLNZ_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, Invariants) {
  RunResult r = run("invariants -n 1 \"2/5\"");
  ASSERT_EQ(r.exit_code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["rank"], 1);
  EXPECT_EQ(j["d"], "5");
  EXPECT_EQ(j["c"], "2");

  RunResult r2 = run("invariants -n 2 \"1/5, 0\"");
  json j2 = json::parse(r2.out);
  EXPECT_EQ(j2["rank"], 1);
  EXPECT_EQ(j2["d"], "5");
  EXPECT_EQ(j2["c"], "1");

  RunResult r3 = run("invariants -n 2 --sym r2=1.41421356 \"r2, 1 + r2\"");
  json j3 = json::parse(r3.out);
  EXPECT_EQ(j3["rank"], 2);
  EXPECT_EQ(j3["d"], "1");
  EXPECT_EQ(j3["c"], "1");
}

TEST(Cli, EquivAndVerifyRoundTrip) {
  RunResult r = run("equiv -n 1 \"1/5\" \"4/5\"");
  ASSERT_EQ(r.exit_code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["equivalent"], true);
  ASSERT_TRUE(j.contains("witness"));
  EXPECT_EQ(j["witness"]["U"][0][0], "-1");
  EXPECT_EQ(j["witness"]["t"][0], "1");

  std::string wfile = std::string(::testing::TempDir()) + "witness.json";
  {
    std::ofstream out(wfile);
    out << j["witness"].dump();
  }
  RunResult v = run("verify -n 1 --witness " + wfile + " \"1/5\" \"4/5\"");
  EXPECT_EQ(v.exit_code, 0);
  EXPECT_EQ(json::parse(v.out)["valid"], true);

  // the same witness does not map 1/5 to 2/5
  RunResult v2 = run("verify -n 1 --witness " + wfile + " \"1/5\" \"2/5\"");
  EXPECT_EQ(v2.exit_code, 1);
  EXPECT_EQ(json::parse(v2.out)["valid"], false);
}

TEST(Cli, EquivNegativeGivesReason) {
  RunResult r = run("equiv -n 1 \"1/5\" \"2/5\"");
  EXPECT_EQ(r.exit_code, 1);
  json j = json::parse(r.out);
  EXPECT_EQ(j["equivalent"], false);
  EXPECT_NE(j["reason"].get<std::string>().find("c:"), std::string::npos);

  RunResult r2 = run("equiv -n 1 \"1/5\" \"1/7\"");
  EXPECT_EQ(r2.exit_code, 1);
  EXPECT_NE(json::parse(r2.out)["reason"].get<std::string>().find("G:"),
            std::string::npos);
}

TEST(Cli, CountAndCanonRoundTrip) {
  RunResult r = run("count --d 5 -n 1");
  ASSERT_EQ(r.exit_code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["count"], "2");
  EXPECT_EQ(j["representatives"].size(), 2u);

  RunResult c = run("canon --e 1 --d 5 --c 2 -n 2");
  ASSERT_EQ(c.exit_code, 0);
  json jc = json::parse(c.out);
  EXPECT_EQ(jc["p"], "3");

  // feed the emitted equations back into `space`
  std::string eqs;
  for (const auto& t : jc["space"]["text"])
    eqs += " \"" + t.get<std::string>() + "\"";
  RunResult s = run("space -n 2" + eqs);
  ASSERT_EQ(s.exit_code, 0);
  json js = json::parse(s.out);
  EXPECT_EQ(js["e"], 1);
  EXPECT_EQ(js["d"], "5");
  EXPECT_EQ(js["c"], "2");
}

TEST(Cli, OracleSubcommands) {
  RunResult n1 = run("oracle n1 \"2/5\"");
  json j1 = json::parse(n1.out);
  EXPECT_EQ(j1["d"], "5");
  EXPECT_EQ(j1["c"], "2");

  RunResult bfs =
      run("oracle bfs -n 1 \"0\" --budget-depth 3 --budget-bound 10");
  json j2 = json::parse(bfs.out);
  EXPECT_EQ(j2["complete"], true);
  EXPECT_EQ(j2["count"], 7);

  RunResult cd = run("oracle cdef -n 2 --cap 5 \"5*y2 = 3\"");
  EXPECT_EQ(json::parse(cd.out)["c"], "2");
}

TEST(Cli, ByteStableOutput) {
  RunResult a = run("invariants -n 2 --sym r2=1.41421356 \"r2, 1 + r2\"");
  RunResult b = run("invariants -n 2 --sym r2=1.41421356 \"r2, 1 + r2\"");
  EXPECT_EQ(a.out, b.out);
  RunResult c = run("equiv -n 2 \"1/5, 0\" \"2/5, 0\"");
  RunResult d = run("equiv -n 2 \"1/5, 0\" \"2/5, 0\"");
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, BatchMode) {
  RunResult r = run("batch", "invariants -n 1 2/5\\nequiv -n 1 1/5 4/5\\n");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream lines(r.out);
  std::string l1, l2;
  ASSERT_TRUE(std::getline(lines, l1));
  ASSERT_TRUE(std::getline(lines, l2));
  EXPECT_EQ(json::parse(l1)["d"], "5");
  EXPECT_EQ(json::parse(l2)["equivalent"], true);
}

TEST(Cli, ErrorExitCodes) {
  EXPECT_EQ(run("invariants -n 1 \"2//5\"").exit_code, 2);   // parse
  EXPECT_EQ(run("invariants -n 1 \"zz\"").exit_code, 3);     // unknown symbol
  EXPECT_EQ(run("invariants -n 2 \"1/2\"").exit_code, 3);    // dimension
  EXPECT_EQ(run("space -n 2 \"y1 = 0\" \"y1 = 1\"").exit_code, 3);
  EXPECT_EQ(run("canon --e 0 --d 6 --c 2 -n 1").exit_code, 3);
}
