#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GRIDLINK_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "gridlink_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string strip_timing(const std::string& report) {
  return report.substr(0, report.find("elapsed_ms:"));
}

const char* kFourPairs =
    "grid 3 3\n"
    "demand pair (1,1) (1,2)\n"
    "demand pair (2,1) (2,2)\n"
    "demand pair (3,1) (3,3)\n"
    "demand pair (1,3) (2,3)\n";

}  // namespace

TEST_CASE("solve") {
  const Run one = run("solve " + write_file("one.txt", "grid 1 1\ndemand pair (1,1) (1,1)\n"));
  CHECK(one.code == 0);
  CHECK(one.out == "path 0: (1,1)\n");

  const Run cols = run("solve " + write_file("cols.txt",
                                             "grid 3 3\n"
                                             "demand escape (1,1) -> {(3,1),(3,2),(3,3)} group 1\n"
                                             "demand escape (1,2) -> {(3,1),(3,2),(3,3)} group 1\n"
                                             "demand escape (1,3) -> {(3,1),(3,2),(3,3)} group 1\n"));
  CHECK(cols.code == 0);
  CHECK(cols.out ==
        "path 0: (1,1) (2,1) (3,1)\n"
        "path 1: (1,2) (2,2) (3,2)\n"
        "path 2: (1,3) (2,3) (3,3)\n");

  // Column terminals in the quadrant without A's edges: the bottom one
  // cannot be joined to b.
  const Run col = run("solve " + write_file("t1.txt",
                                            "grid 3 3\n"
                                            "remove_edge (3,1) (3,2)\n"
                                            "remove_edge (3,2) (3,3)\n"
                                            "demand pair (3,1) (2,3)\n"
                                            "demand escape (1,1) -> {(3,1),(3,2),(3,3)}\n"
                                            "demand escape (2,1) -> {(3,1),(3,2),(3,3)}\n"));
  CHECK(col.code == 1);
  CHECK(col.out == "infeasible\n");

  const Run bad = run("solve " + write_file("bad.txt", "grid 2 2\ndemand pair (1,1) (5,5)\n"));
  CHECK(bad.code == 2);
  CHECK(bad.out.find("line 2") != std::string::npos);
  CHECK(run("solve /nonexistent/file").code == 2);
}

TEST_CASE("verify") {
  const std::string inst = write_file("four.txt", kFourPairs);
  const Run solved = run("solve " + inst);
  REQUIRE(solved.code == 0);
  const std::string cert = write_file("four.cert", solved.out);
  CHECK(run("verify " + inst + " " + cert).code == 0);

  const Run reuse = run("verify " + inst + " " +
                        write_file("reuse.cert",
                                   "path 0: (1,1) (1,2)\n"
                                   "path 1: (2,1) (2,2)\n"
                                   "path 2: (3,1) (2,1) (2,2) (3,2) (3,3)\n"
                                   "path 3: (1,3) (2,3)\n"));
  CHECK(reuse.code == 1);
  CHECK(reuse.out.find("edge reuse at demand 2") != std::string::npos);

  const Run short_cert = run("verify " + inst + " " +
                             write_file("short.cert",
                                        "path 0: (1,1) (1,2)\n"
                                        "path 1: (2,1) (2,2)\n"
                                        "path 2: (3,1) (3,2) (3,3)\n"));
  CHECK(short_cert.code == 1);
  CHECK(short_cert.out.find("expected 4 paths, found 3") != std::string::npos);

  CHECK(run("verify " + inst + " " + write_file("inf.cert", "infeasible\n")).code == 1);
  CHECK(run("verify " + inst + " " + write_file("junk.cert", "paths\n")).code == 2);
}

TEST_CASE("lemma") {
  const Run l4 = run("lemma L4 --workers 1");
  CHECK(l4.code == 0);
  CHECK(l4.out.find("weakly_2_linked: 8") != std::string::npos);

  const std::string out = (fs::temp_directory_path() / "gridlink_cli_test" / "l9.txt").string();
  const Run l9 = run("lemma L9 --report " + out);
  CHECK(l9.code == 0);
  CHECK(l9.out.find("exceptional_set: T1") != std::string::npos);
  CHECK(l9.out.find("exceptional_set: T2") != std::string::npos);
  std::ifstream in(out);
  const std::string saved((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(saved == l9.out);

  CHECK(run("lemma L5 --strategy random --samples 20 --seed 4").code == 0);
  CHECK(run("lemma L5 --strategy random --samples 20").code == 2);
  CHECK(run("lemma L5 --strategy random --seed 4").code == 2);
  CHECK(run("lemma L42").code == 2);
  CHECK(run("lemma L5 --strategy sideways").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("pairability") {
  const Run a = run("pairability --samples 1000 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out.find("seed: 7\n") != std::string::npos);
  CHECK(a.out.find("defects: 0\n") != std::string::npos);
  const Run b = run("pairability --samples 1 --seed 7");
  const Run c = run("pairability --samples 1 --seed 7 --workers 2");
  CHECK(strip_timing(b.out) == strip_timing(c.out));
  CHECK(run("pairability --samples 0").code == 2);
  CHECK(run("pairability --exhaustive-reduced --samples 5").code == 2);
  CHECK(run("pairability --limit 5").code == 2);
  CHECK(run("pairability --exhaustive-reduced --limit 50").code == 0);
}
