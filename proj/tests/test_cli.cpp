#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#ifndef SK_CLI_PATH
#define SK_CLI_PATH "straightknot"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = fs::temp_directory_path() / ("sk_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST(Cli, Identify) {
  auto f = temp_file("trefoil.pd", "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]\n");
  auto r = run("identify --pd " + f);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3_1\n");
  EXPECT_EQ(run("identify --pd " + temp_file("bad.pd", "[[1,2,3,4],[1,2,3,5]]")).code, 2);
  EXPECT_EQ(run("identify --pd /nonexistent/x.pd").code, 2);
  EXPECT_EQ(run("identify").code, 2);
}

TEST(Cli, StraightNumber) {
  auto r = run("straight-number --knot 9_32 --max-crossings 10 --threads 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"value\": 10"), std::string::npos);
  EXPECT_EQ(run("straight-number --knot 8_18 --max-crossings 9").code, 1);
  EXPECT_EQ(run("straight-number --knot no_such_knot").code, 2);
  auto svg = (fs::temp_directory_path() / "sk_cli_w.svg").string();
  EXPECT_EQ(run("straight-number --knot 3_1 --max-crossings 3 --witness " + svg).code, 0);
  EXPECT_TRUE(fs::exists(svg));
}

TEST(Cli, EnumerateCounts) {
  EXPECT_EQ(run("enumerate --crossings 6 --shadows-only --count").out, "58\n");
  EXPECT_EQ(run("enumerate --crossings 1 --count --no-prune").out, "2\n");
  EXPECT_EQ(run("enumerate --crossings 0").code, 2);
}

TEST(Cli, FamiliesAndBounds) {
  auto w = run("family weaving --n 3 --m 4 --emit pd");
  EXPECT_EQ(w.code, 0);
  auto f = temp_file("w34.pd", w.out);
  EXPECT_EQ(run("identify --pd " + f).out, "8_18\n");
  EXPECT_EQ(run("family weaving --n 3 --m 3").code, 2);
  EXPECT_EQ(run("family spiral --n 2 --m 3 --eps 1 --emit gauss").code, 0);
  EXPECT_EQ(run("bound weaving --n 3 --m 5").out, "closed form: 9\n");
  EXPECT_EQ(run("bound weaving --n 3 --m 3").code, 2);
}

TEST(Cli, TwistTemplateFlypes) {
  auto f = temp_file("t.pd", "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]");
  auto t = run("twist insert --pd " + f + " --region 0 --full-twists 1");
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(run("identify --pd " + temp_file("t5.pd", t.out)).out, "5_1\n");
  EXPECT_EQ(run("twist insert --pd " + f + " --region 4 --full-twists 1").code, 2);
  EXPECT_EQ(run("template --t 1,1,2,2,1,1 --emit straight").out, "10; 2 5 8 7 6 1 10 3 4 9; UDUDUDUUDUD; 1010110110\n");
  EXPECT_EQ(run("template --t 2,1,2,2,1,1").code, 2);
  EXPECT_EQ(run("template --t 1,1,2").code, 2);
  EXPECT_EQ(run("verify template --t 1,1,2,2,1,1").code, 0);
  EXPECT_EQ(run("verify weaving --n 3 --m 3").code, 2);
  EXPECT_EQ(run("flypes --pd " + f).code, 0);
}
