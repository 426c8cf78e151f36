#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WMILNOR_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(WMILNOR_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("wmilnor_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, InvariantsOfW21) {
  const auto r = run("invariants " + data("w21.json") + " --max-len 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sequence\tvalue\n1,1\t0\n1,2\t0\n2,1\t1\n2,2\t0\n");
}

TEST(Cli, InvariantsOfTrivialAreZero) {
  const auto r = run("invariants " + data("trivial3.json") + " --max-len 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("\t1"), std::string::npos);
  EXPECT_NE(r.out.find("3,3,3\t0"), std::string::npos);
}

TEST(Cli, InvariantsModN) {
  const auto r = run("invariants " + data("w21_cubed.json") + " --non-repeated --mod 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sequence\tvalue\n1,2\t0\n2,1\t1\n");
}

TEST(Cli, BadJsonIsInputError) {
  EXPECT_EQ(run("invariants " + temp_file("bad.json", "{oops")).code, 2);
  EXPECT_EQ(run("invariants /nonexistent.json").code, 2);
  EXPECT_EQ(run("invariants " + temp_file("invalid.json", R"({"m": 1, "strands": [[{"id": 1, "role": "o", "sign": 1}]]})"))
                .code,
            2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("invariants " + data("w21.json") + " --max-len x").code, 1);
  EXPECT_EQ(run("verify --suite nonsense").code, 1);
  EXPECT_EQ(run("normal-form " + data("w21.json") + " --relation vn-sv").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, NormalFormVn) {
  const auto r = run("normal-form " + data("w21_cubed.json") + " --relation vn-sv --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("k\ti\tI\texponent\n1\t1\t2\t1\n1\t2\t1\t0\n"), std::string::npos);
}

TEST(Cli, NormalFormTwoNMergesZ) {
  const auto r = run("normal-form " + data("w21_cubed.json") + " --relation 2n-sv --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1\t1\t2\t1\n1\t2\t1\t-2\n"), std::string::npos);
}

TEST(Cli, NormalFormSvIgnoresN) {
  const auto a = run("normal-form " + data("trivial3.json") + " --relation sv");
  const auto b = run("normal-form " + data("trivial3.json") + " --relation sv --n 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("\t1\n"), std::string::npos);
}

TEST(Cli, NormalFormWritesFiles) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto d = (dir / "wmilnor_cli_nf.json").string(), e = (dir / "wmilnor_cli_nf.tsv").string();
  const auto r = run("normal-form " + data("full_twist.json") + " --diagram-out " + d + " --exponents-out " + e);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const auto inv = run("invariants " + d + " --non-repeated");
  EXPECT_EQ(inv.out, "sequence\tvalue\n1,2\t1\n2,1\t1\n");
}

TEST(Cli, ApplyMoves) {
  const auto moved = run("apply-move " + data("w21.json") + " --move 2n --site 1:0,2:1 --n 2 --sign -1");
  EXPECT_EQ(moved.code, 0);
  const auto f = temp_file("moved.json", moved.out);
  EXPECT_EQ(run("invariants " + f + " --non-repeated").out, "sequence\tvalue\n1,2\t-2\n2,1\t-1\n");
  const auto back = run("apply-move " + f + " --move 2n-delete --site 1:0,2:1 --n 2");
  EXPECT_EQ(back.code, 0);
  EXPECT_EQ(back.out, run("gen --m 2 --I 2 --i 1").out);
  EXPECT_EQ(run("apply-move " + data("w21.json") + " --move r1-delete --id 1").code, 2);
  EXPECT_EQ(run("apply-move " + data("w21.json") + " --move r3").code, 1);
  EXPECT_EQ(run("apply-move " + data("w21.json") + " --move 2n").code, 1);
}

TEST(Cli, ScrambleIsDeterministic) {
  const auto a = run("apply-move " + data("full_twist.json") + " --move scramble --steps 20 --seed 5");
  const auto b = run("apply-move " + data("full_twist.json") + " --move scramble --steps 20 --seed 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Equiv) {
  EXPECT_EQ(run("equiv " + data("w21.json") + " " + data("w21_cubed.json")).out, "not-equivalent\n");
  EXPECT_EQ(run("equiv " + data("w21.json") + " " + data("w21_cubed.json") + " --relation vn-sv --n 2").out,
            "equivalent\n");
  EXPECT_EQ(run("equiv " + data("w21.json") + " " + data("w21_cubed.json") + " --relation 2n-sv --n 2").out,
            "not-equivalent\n");
  EXPECT_EQ(run("equiv " + data("w21.json") + " " + data("trivial3.json")).code, 2);
}

TEST(Cli, VerifyCounting) {
  const auto r = run("verify --suite counting");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m=2 n=2 classes=4 expected=4 PASS\n"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministicPerSeed) {
  const auto a = run("verify --suite isotopy --seed 9 --trials 5");
  const auto b = run("verify --suite isotopy --seed 9 --trials 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("suite=isotopy seed=9 trials=5 failures=0 PASS"), std::string::npos);
}

TEST(Cli, VerifySuitesPass) {
  for (const char* s : {"2n", "vn", "prime-p", "normal-form"})
    EXPECT_EQ(run(std::string("verify --suite ") + s + " --trials 4 --seed 2").code, 0) << s;
}

TEST(Cli, Count) {
  EXPECT_EQ(run("count --m 3 --n 2").out, "m=3 s_m=4 w_m=9 n=2 order=512\n");
  const auto e = run("count --m 2 --n 2 --enumerate");
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("classes=4 expected=4"), std::string::npos);
  EXPECT_EQ(run("count --m 4 --n 2 --enumerate").code, 1);
}

TEST(Cli, Gen) {
  EXPECT_EQ(run("gen --m 2").out, "{\"m\": 2, \"strands\": [\n  [],\n  []\n]}\n");
  const auto r = run("gen --m 2 --random --crossings 5 --seed 3");
  EXPECT_EQ(r.out, run("gen --m 2 --random --crossings 5 --seed 3").out);
  EXPECT_EQ(run("gen --m 3 --I 3,2 --i 1").code, 1);
  const auto w = temp_file("w231.json", run("gen --m 3 --I 2,3 --i 1 --power -2").out);
  EXPECT_NE(run("invariants " + w + " --max-len 3 --non-repeated").out.find("2,3,1\t-2\n"), std::string::npos);
}
