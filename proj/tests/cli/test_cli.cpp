#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HECKEKIT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("compute commands") {
  auto r = run("theta --type A1 '[-1]'");
  CHECK(r.status == 0);
  CHECK(r.out == "(v^-1 - v)*T[t[1]*s1] + (v^-1)*T[t[-1]]\n");

  r = run("kl --type A1 --x e --w s1");
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");

  r = run("masp-act --type A1 --hecke '(v^-1 - v)*T[t[1]*s1] + (v^-1)*T[t[-1]]'");
  CHECK(r.status == 0);
  CHECK(r.out == "(-v)*m[t[1]*s1]\n");

  r = run("qweight --type A2 '[1,1]' '[0,0]' --format json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"Q_t\": \"t^9 + t^11\"") != std::string::npos);

  r = run("whittaker-table --type A2 '[1,1]'");
  CHECK(r.status == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 8);
}

TEST_CASE("verification reports") {
  for (const char* args : {"verify center --type A1 --bound 4 --seed 0", "verify euler --type A2 --bound 6 --seed 0",
                           "verify whittaker --type A1 --bound 6 --seed 0"}) {
    CAPTURE(std::string(args));
    CHECK(run(args).status == 0);
  }
  const auto a = run("verify all --type A2 --bound 4 --seed 11 --format json");
  const auto b = run("verify all --type A2 --bound 4 --seed 11 --format json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"schema\": 1") != std::string::npos);
  CHECK(a.out.find("\"seed\": 11") != std::string::npos);
  CHECK(a.out.find("duration") == std::string::npos);
  CHECK(run("verify all --type A2 --bound 4 --seed 11 --format json --timing").out.find("duration_seconds") !=
        std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("verify nosuch --type A1").status == 2);
  CHECK(run("theta --type Z9 '[1]'").status == 2);
  CHECK(run("theta --type A1 '[1,2]'").status == 2);
  CHECK(run("center --type A1 '[-1]'").status == 2);
  CHECK(run("qweight --type A1 '[-2]' '[0]'").status == 2);
  CHECK(run("theta --type A1 '[1]' --format csv").status == 2);
  CHECK(run("verify braid --type A1 --bound 11").status == 3);
  CHECK(run("verify braid --type A1 --bound 5 --budget 4").status == 3);
  CHECK(run("kl --type A1 --w 't[3]' --budget 2").status == 3);
  CHECK(run("--help").status == 0);
}
