#include <array>
#include <cstdio>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run thresh(const std::string& args) {
  const std::string cmd = std::string(THRESH_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(thresh("analyze 0011").status, 0);
  EXPECT_EQ(thresh("analyze 0110").status, 2);
  EXPECT_EQ(thresh("analyze 01a1").status, 2);
  EXPECT_EQ(thresh("no-such-command").status, 1);
  EXPECT_EQ(thresh("walk 0011 --time pi/2").status, 1);
}

TEST(Cli, Spectrum) {
  const auto r = thresh("spectrum 0011");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("4^(2)"), std::string::npos) << r.out;
}

TEST(Cli, PairTransfer) {
  const auto r = thresh("pst 0011 --pair 1,3,2,3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("pi/2"), std::string::npos) << r.out;
}

TEST(Cli, WalkFidelity) {
  const auto r = thresh("walk 0011 --time pi/2 --src e1 --dst e2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("fidelity"), std::string::npos) << r.out;
}

TEST(Cli, WhdJson) {
  const auto r = thresh("whd 000111111111 --json");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"columns\""), std::string::npos) << r.out;
}

TEST(Cli, EnumerateCsv) {
  const auto r = thresh("enumerate --n-min 4 --n-max 4 --ss-only --csv -");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("n,sequence,expression,ss,whd,pst_pairs,vertex_pst,min_time"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("0011"), std::string::npos);
  EXPECT_EQ(r.out.find("0101"), std::string::npos);
}
