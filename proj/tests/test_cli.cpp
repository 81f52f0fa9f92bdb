// End-to-end checks of the command line tool, run as a subprocess against
// the sample files.  RCLOS_CLI and RCLOS_SAMPLES are provided by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string command = std::string(RCLOS_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string sample(const std::string& name) {
  return std::string(RCLOS_SAMPLES) + "/" + name;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

// verdict lines only, stats comments stripped
std::string stable_part(const std::string& text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    if (!line.empty() && line[0] != '#') {
      out += line;
      out += '\n';
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("build reports size within the bound") {
  RunResult r = run("build " + sample("a_plus.aut"));
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output).rfind("BUILT elements=", 0) == 0);
  RunResult dumped = run("build " + sample("a_plus.aut") + " --dump");
  CHECK(dumped.exit_code == 0);
  CHECK(dumped.output.find("a^w") != std::string::npos);
}

TEST_CASE("build rejects malformed input with exit 2") {
  RunResult r = run("build " + sample("right_zero.sgp"));
  CHECK(r.exit_code == 2);
  RunResult missing = run("build /nonexistent.aut");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("build honors the cap with exit 3") {
  RunResult r = run("build " + sample("ab_plus.aut") + " --cap 2");
  CHECK(r.exit_code == 3);
}

TEST_CASE("member verdicts and certificates") {
  RunResult yes = run("member " + sample("a_plus.aut") + " a^w");
  CHECK(yes.exit_code == 0);
  CHECK(first_line(yes.output) == "MEMBER");

  RunResult no = run("member " + sample("a_plus.aut") + " b^w");
  CHECK(no.exit_code == 1);
  CHECK(first_line(no.output) == "NOT_MEMBER");

  RunResult certified =
      run("member " + sample("ab_plus.aut") + " \"(ab)^w a\" --certify");
  CHECK(certified.exit_code == 0);
  CHECK(certified.output.find("certificate:") != std::string::npos);
  CHECK(certified.output.find("verified=true") != std::string::npos);

  RunResult bad_term = run("member " + sample("a_plus.aut") + " \"a)\"");
  CHECK(bad_term.exit_code == 2);
  RunResult bad_letter = run("member " + sample("a_plus.aut") + " c");
  CHECK(bad_letter.exit_code == 2);
}

TEST_CASE("separate verdicts") {
  RunResult sep =
      run("separate " + sample("a_plus.aut") + " " + sample("b_plus.aut") +
          " --oracle 2");
  CHECK(sep.exit_code == 0);
  CHECK(first_line(sep.output) == "SEPARABLE");
  CHECK(sep.output.find("agreement=true") != std::string::npos);

  RunResult notsep = run("separate " + sample("ab_plus.aut") + " " +
                         sample("ab_star_a.aut"));
  CHECK(notsep.exit_code == 1);
  CHECK(first_line(notsep.output) == "NOT_SEPARABLE");
  CHECK(notsep.output.find("witness: ") != std::string::npos);

  RunResult self =
      run("separate " + sample("ab_plus.aut") + " " + sample("ab_plus.aut"));
  CHECK(self.exit_code == 1);

  RunResult single = run("separate " + sample("a_plus.aut"));
  CHECK(single.exit_code == 2);
}

TEST_CASE("pointlike verdicts") {
  RunResult rz = run("pointlike " + sample("right_zero.sgp") + " x y");
  CHECK(rz.exit_code == 0);
  CHECK(first_line(rz.output) == "POINTLIKE");
  CHECK(rz.output.find("witness: ") != std::string::npos);

  RunResult rz_idem =
      run("pointlike " + sample("right_zero.sgp") + " \"x y\" --idempotent");
  CHECK(rz_idem.exit_code == 0);
  CHECK(first_line(rz_idem.output) == "IDEMPOTENT_POINTLIKE");

  RunResult lz = run("pointlike " + sample("left_zero.sgp") + " x y");
  CHECK(lz.exit_code == 1);
  CHECK(first_line(lz.output) == "NOT_POINTLIKE");

  RunResult unknown = run("pointlike " + sample("right_zero.sgp") + " q");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("witness terms round-trip through member") {
  RunResult notsep = run("separate " + sample("ab_plus.aut") + " " +
                         sample("ab_star_a.aut"));
  REQUIRE(notsep.exit_code == 1);
  std::string output = notsep.output;
  auto pos = output.find("witness: ");
  REQUIRE(pos != std::string::npos);
  auto end = output.find('\n', pos);
  std::string term = output.substr(pos + 9, end - pos - 9);
  RunResult member1 =
      run("member " + sample("ab_plus.aut") + " \"" + term + "\"");
  CHECK(member1.exit_code == 0);
  RunResult member2 =
      run("member " + sample("ab_star_a.aut") + " \"" + term + "\"");
  CHECK(member2.exit_code == 0);
}

TEST_CASE("regex arguments") {
  RunResult sep = run("separate re:a+ re:b+");
  CHECK(sep.exit_code == 0);
  CHECK(first_line(sep.output) == "SEPARABLE");

  RunResult notsep = run("separate \"re:(ab)+\" \"re:(ab)*a\"");
  CHECK(notsep.exit_code == 1);
  CHECK(first_line(notsep.output) == "NOT_SEPARABLE");

  RunResult member = run("member \"re:(ab)+\" \"(ab)^w a\" --certify");
  CHECK(member.exit_code == 0);
  CHECK(member.output.find("verified=true") != std::string::npos);

  RunResult empty_word = run("build \"re:(ab)*\"");
  CHECK(empty_word.exit_code == 2);
  CHECK(empty_word.output.find("empty word") != std::string::npos);
}

TEST_CASE("identical inputs give identical verdict lines") {
  std::string cmd =
      "separate " + sample("ab_plus.aut") + " " + sample("ab_star_a.aut");
  RunResult first = run(cmd);
  RunResult second = run(cmd);
  CHECK(stable_part(first.output) == stable_part(second.output));
  RunResult serial = run(cmd + " --serial");
  CHECK(stable_part(first.output) == stable_part(serial.output));
}
