#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Golden harness: every manifest case runs twice; both runs must agree and
// match the stored golden byte for byte after normalization (the wall-time
// manifest line is dropped, the fixture directory becomes @FIXTURES@).

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

std::string shell_quote(const std::string& arg) {
  // fixture paths and node literals never contain single quotes
  return "'" + arg + "'";
}

CliResult run_cli(const std::vector<std::string>& args) {
  std::string cmd = shell_quote(SYMBA_BIN_PATH);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, out};
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
  size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

std::string normalize(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.find("\"wall_time_ms\"") != std::string::npos) continue;
    if (!first) out += "\n";
    out += line;
    first = false;
  }
  if (!text.empty() && text.back() == '\n') out += "\n";
  return replace_all(out, SYMBA_FIXTURE_DIR, "@FIXTURES@");
}

std::string substitute_fixtures(const std::string& arg) {
  return replace_all(arg, "@FIXTURES@", SYMBA_FIXTURE_DIR);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

std::vector<GoldenCase> load_manifest() {
  std::ifstream in(std::string(SYMBA_GOLDEN_DIR) + "/manifest.txt");
  REQUIRE(in.good());
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    GoldenCase c;
    size_t pos = 0;
    std::vector<std::string> fields;
    while (true) {
      size_t tab = line.find('\t', pos);
      fields.push_back(line.substr(pos, tab == std::string::npos ? tab : tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    REQUIRE(fields.size() >= 2);
    c.name = fields[0];
    for (size_t i = 1; i < fields.size(); ++i)
      c.args.push_back(substitute_fixtures(fields[i]));
    cases.push_back(std::move(c));
  }
  REQUIRE(cases.size() >= 80);
  return cases;
}

}  // namespace

TEST_CASE("golden suite matches and is deterministic across runs") {
  for (const auto& c : load_manifest()) {
    CAPTURE(c.name);
    CliResult first = run_cli(c.args);
    CliResult second = run_cli(c.args);
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    std::string n1 = normalize(first.out);
    std::string n2 = normalize(second.out);
    CHECK(n1 == n2);
    std::string golden = read_file(std::string(SYMBA_GOLDEN_DIR) + "/" + c.name + ".golden");
    CHECK_MESSAGE(n1 == golden, "golden mismatch for " << c.name);
  }
}

TEST_CASE("validation failures exit 2 with an error report") {
  const std::string fix = SYMBA_FIXTURE_DIR;
  std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"unknown subcommand", {"frobnicate"}},
      {"malformed rational", {"norm", "--space", "counting", "--vec", "a=1/0"}},
      {"malformed ordinal", {"tree", "q", "--eta", "w**2"}},
      {"weights exhausted",
       {"norm", "--space", "lorentz_dual", "--weights", "explicit:" + fix + "/weights_ones.json",
        "--vec", "a=1,b=1,c=1,d=1"}},
      {"table exhausted",
       {"theta", "--provider", "table:" + fix + "/table_rho.json", "--vec",
        "a=1,b=1,c=1,d=1,e=1"}},
      {"csv for scalar report",
       {"norm", "--space", "counting", "--vec", "a=1", "--format", "csv"}},
      {"csv for theta", {"theta", "--provider", "counting", "--vec", "a=1", "--format", "csv"}},
      {"missing vec", {"norm", "--space", "counting"}},
      {"unknown format", {"norm", "--space", "counting", "--vec", "a=1", "--format", "xml"}},
      {"unknown series kind", {"check", "--kind", "fibonacci", "--N", "10"}},
      {"budget zero",
       {"tree", "children", "--alpha", "4", "--node", "[w*3+1]", "--betas", "2", "--budget", "0"}},
      {"wedge without bar",
       {"tree", "transport", "--alpha", "w", "--s", "[7]", "--u", "[9]", "--point", "[10]",
        "--wedge", "[10]"}},
  };
  for (const auto& [label, args] : cases) {
    CAPTURE(label);
    CliResult r = run_cli(args);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("\"validation\"") != std::string::npos);
  }
}

TEST_CASE("numeric failures exit 3") {
  CliResult r = run_cli({"norm", "--space", "orlicz", "--M", "exp_reciprocal", "--vec", "a=1"});
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("\"numeric\"") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
  std::string path = std::string(SYMBA_GOLDEN_DIR) + "/../.out_tmp.json";
  CliResult r = run_cli({"norm", "--space", "lorentz_dual", "--weights", "harmonic", "--vec",
                         "a=2,b=1", "--out", path});
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::string written = read_file(path);
  CHECK(written.find("\"value\": \"5/2\"") != std::string::npos);
  std::remove(path.c_str());
}
