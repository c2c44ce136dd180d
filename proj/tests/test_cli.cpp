#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "centext/presentation.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "centext");
  std::ostringstream out, err;
  const int code = centext::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "centext_cli_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("q-normal") {
  const auto r = run({"q-normal", "d3^2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/3  =  d3^2\n");
  CHECK(run({"q-normal", "d2^2 d1^-1"}).out == "0  =  1\n");
  CHECK(run({"q-normal", "a"}).code == centext::cli::usage);
}

TEST_CASE("present and enumerate") {
  const auto p = scratch("b222.txt", "");
  auto r = run({"present", "burnside", "-m", "2", "-n", "2", "-L", "2", "-o", p.string()});
  CHECK(r.code == 0);
  CHECK(read_file(p) == centext::serialize(centext::build_burnside(2, 2, 2)));
  r = run({"enumerate", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "order 4\n");

  const auto free = scratch("free.txt", "gens 2\n");
  r = run({"enumerate", free.string(), "--max-cosets", "100"});
  CHECK(r.code == centext::cli::overflow);
  CHECK(r.out == "OVERFLOW\n");
}

TEST_CASE("present a-q matches the golden file") {
  const auto r = run({"present", "a-q", "-m", "2", "-n", "665", "-L", "1", "--imax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == read_file(fs::path(CENTEXT_GOLDEN_DIR) / "a_q_2_665_1_imax2.txt"));
}

TEST_CASE("present a-d with a constant assignment") {
  const auto r = run({"present", "a-d", "-m", "2", "-n", "3", "-L", "1", "--abelian", "C_3", "--assign", "const:d1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rel d1^3\n") != std::string::npos);
  CHECK(r.out.find("rel a^3 d1^-1\n") != std::string::npos);
  const auto file = scratch("sigma.txt", "period 1 -> d1\nperiod 2 -> d1^2\n");
  const auto s = run({"present", "a-d", "-m", "2", "-n", "3", "-L", "1", "--abelian", "C_3", "--assign", file.string()});
  CHECK(s.code == 0);
  CHECK(s.out.find("rel b^3 d1^-2\n") != std::string::npos);
  // The default bijective assignment needs one generator per period.
  CHECK(run({"present", "a-d", "-m", "2", "-n", "3", "-L", "1", "--abelian", "C_3"}).code == centext::cli::usage);
}

TEST_CASE("stabilize") {
  auto r = run({"stabilize", "burnside", "-m", "2", "-n", "2", "--Lmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 4 (stabilized at L=2)") == 0);
  CHECK(r.out.find("certified") != std::string::npos);
  r = run({"stabilize", "--builder", "burnside", "-m", "1", "-n", "5", "--Lmax", "2"});
  CHECK(r.out.find("order 5 (stabilized at L=1)") == 0);
  r = run({"stabilize", "burnside", "-m", "2", "-n", "5", "--Lmax", "2", "--max-cosets", "500"});
  CHECK(r.code == centext::cli::overflow);
}

TEST_CASE("analyze") {
  const auto s3 = scratch("s3.txt", "gens 2\nrel a^2\nrel b^3\nrel a b a b\n");
  const auto r = run({"analyze", s3.string(), "--verbal", "3", "--identity", "3", "--center", "--exponent"});
  CHECK(r.code == centext::cli::property_failure);
  CHECK(r.out.find("order 6\n") == 0);
  CHECK(r.out.find("exponent 6\n") != std::string::npos);
  CHECK(r.out.find("center order 1: {1}") != std::string::npos);
  CHECK(r.out.find("verbal x^3 subgroup order 6 (whole group)") != std::string::npos);
  CHECK(r.out.find("identity [x^3,y]=1: false, witness") != std::string::npos);
  const auto ok = run({"analyze", s3.string(), "--identity", "6", "--fingerprint"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("fingerprint (6,6,C_2,1,{1,2,2,2,3,3},{1,2,3})") != std::string::npos);
}

TEST_CASE("schur") {
  const auto r = run({"schur", "-m", "2", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "V(2,2) = Z^2 x C_2\nM(2,2) = C_2\n");
}

TEST_CASE("verify-theorem1") {
  auto r = run({"verify-theorem1", "-m", "2", "-n", "3", "-L", "3", "--abelian", "C_3", "--auto-psi", "project:4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("A_D(2,3) at L=3: order 81\n") == 0);
  CHECK(r.out.find("EMBEDDING: yes") != std::string::npos);
  r = run({"verify-theorem1", "-m", "2", "-n", "2", "-L", "2", "--abelian", "C_2 x C_2 x C_2 x C_2"});
  CHECK(r.out.find("EMBEDDING: no") != std::string::npos);
  // C_3 -> C_2 is not a homomorphism.
  CHECK(run({"verify-theorem1", "-m", "2", "-n", "3", "-L", "3", "--abelian", "C_2", "--auto-psi", "project:3"}).code ==
        centext::cli::usage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == centext::cli::usage);
  CHECK(run({"frobnicate"}).code == centext::cli::usage);
  CHECK(run({"present", "nonsense"}).code == centext::cli::usage);
  CHECK(run({"enumerate", "/nonexistent/file"}).code == centext::cli::usage);
  CHECK(run({"--help"}).code == 0);
  const auto bad = scratch("bad.txt", "gens 1\nrel a^0\n");
  const auto r = run({"enumerate", bad.string()});
  CHECK(r.code == centext::cli::usage);
  CHECK(r.err.find("line 2") != std::string::npos);
}
