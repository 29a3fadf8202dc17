#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracle_values.hpp"

using nlohmann::json;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args, bool keep_stderr = false) {
  std::string cmd = std::string(FLINTHILLS_CLI_PATH) + " " + args;
  cmd += keep_stderr ? " 2>&1" : " 2>/dev/null";
  CliRun result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    result.out.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<json> json_lines(const std::string& out) {
  std::vector<json> records;
  size_t pos = 0;
  while (pos < out.size()) {
    size_t end = out.find('\n', pos);
    if (end == std::string::npos) end = out.size();
    std::string line = out.substr(pos, end - pos);
    if (!line.empty()) records.push_back(json::parse(line));
    pos = end + 1;
  }
  return records;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

TEST_CASE("classify renders both verdicts with their justification") {
  CliRun r = run_cli("classify --u 8 --v 1");
  REQUIRE(r.exit_code == 0);
  auto records = json_lines(r.out);
  REQUIRE(records.size() == 2);
  CHECK(records[0]["outputs"]["target"] == "sequence");
  CHECK(records[0]["outputs"]["kind"] == "SequenceToZero");
  CHECK(records[1]["outputs"]["target"] == "series");
  CHECK(records[1]["outputs"]["kind"] == "SeriesConverges");
  CHECK(records[1]["outputs"]["theorem"].get<std::string>().find("Theorem 2") !=
        std::string::npos);

  CliRun open = run_cli("classify --u 3 --v 2");
  auto open_records = json_lines(open.out);
  REQUIRE(open_records.size() == 2);
  for (const auto& rec : open_records) {
    CHECK(rec["outputs"]["kind"] == "Unknown");
    CHECK(!rec["outputs"]["unknown_detail"].get<std::string>().empty());
  }
}

TEST_CASE("pi command returns the cached digits") {
  CliRun r = run_cli("pi --digits 10");
  REQUIRE(r.exit_code == 0);
  auto records = json_lines(r.out);
  REQUIRE(records.size() == 1);
  CHECK(records[0]["outputs"]["pi"]["value"] == oracle::kPiRounded10);
  CHECK(records[0]["certified_digits"] == 10);
}

TEST_CASE("sin command certifies the spike at 355") {
  CliRun r = run_cli("sin --n 355 --digits 10");
  REQUIRE(r.exit_code == 0);
  auto records = json_lines(r.out);
  REQUIRE(records.size() == 1);
  CHECK(records[0]["outputs"]["sin"]["value"] == "-3.014435336e-5");
  CHECK(records[0]["outputs"]["sin"]["certified_digits"].get<long>() >= 10);
}

TEST_CASE("spikes command emits one record per spike") {
  CliRun r = run_cli("spikes --max-n 400 --u 3 --v 2 --threshold 10");
  REQUIRE(r.exit_code == 0);
  auto records = json_lines(r.out);
  REQUIRE(records.size() == 1);
  CHECK(records[0]["outputs"]["n"] == "355");
  CHECK(records[0]["outputs"]["m"] == "113");
}

TEST_CASE("sum command streams decade checkpoints") {
  CliRun r = run_cli("sum --max-n 500 --u 3 --v 2");
  REQUIRE(r.exit_code == 0);
  auto records = json_lines(r.out);
  REQUIRE(records.size() == 3);  // 10, 100, 500
  CHECK(records[0]["outputs"]["upto_n"] == 10);
  CHECK(records[1]["outputs"]["upto_n"] == 100);
  CHECK(records[2]["outputs"]["upto_n"] == 500);
}

TEST_CASE("identical invocations are byte-identical") {
  CliRun a = run_cli("sum --max-n 200 --u 3 --v 2 --threads 1");
  CliRun b = run_cli("sum --max-n 200 --u 3 --v 2 --threads 3");
  CHECK(a.out == b.out);
  CliRun c = run_cli("witness --convergent-index 3");
  CliRun d = run_cli("witness --convergent-index 3");
  CHECK(c.out == d.out);
}

TEST_CASE("csv and json renderings carry identical fields") {
  CliRun j = run_cli("term --n 355 --u 3 --v 2");
  CliRun c = run_cli("term --n 355 --u 3 --v 2 --format csv");
  auto records = json_lines(j.out);
  REQUIRE(records.size() == 1);

  size_t newline = c.out.find('\n');
  REQUIRE(newline != std::string::npos);
  auto header = split_csv_line(c.out.substr(0, newline));
  auto values =
      split_csv_line(c.out.substr(newline + 1,
                                  c.out.find('\n', newline + 1) - newline - 1));
  REQUIRE(header.size() == values.size());

  auto lookup = [&](const std::string& key) -> std::string {
    for (size_t i = 0; i < header.size(); ++i)
      if (header[i] == key) return values[i];
    return "<missing>";
  };
  CHECK(lookup("outputs.term.value") ==
        records[0]["outputs"]["term"]["value"].get<std::string>());
  CHECK(lookup("outputs.m") == "113");
  CHECK(lookup("command") == "term");
  CHECK(lookup("outputs.residual.value") ==
        records[0]["outputs"]["residual"]["value"].get<std::string>());
}

TEST_CASE("history renders five rows in both formats") {
  CliRun j = run_cli("history");
  CHECK(json_lines(j.out).size() == 5);
  CliRun c = run_cli("history --format csv");
  size_t lines = 0;
  for (char ch : c.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 6);  // header + 5 rows
}

TEST_CASE("exit codes distinguish usage and resource errors") {
  CHECK(run_cli("classify --u 8").exit_code == 2);           // missing --v
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("term --n 0 --u 3 --v 2").exit_code == 2);   // bad n
  CHECK(run_cli("pi --digits 200001").exit_code == 3);       // beyond cap
  CHECK(run_cli("pi --digits 50 --precision-cap 20").exit_code == 3);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("environment variable sets the default precision cap") {
  std::string cmd = "env FLINTHILLS_PRECISION_CAP=20 " +
                    std::string(FLINTHILLS_CLI_PATH) +
                    " pi --digits 50 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("spike candidates that hit the cap are reported, not dropped") {
  CliRun r = run_cli(
      "spikes --max-n 6 --u 3 --v 2 --threshold 1 --precision-cap 8", true);
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("hit the precision cap") != std::string::npos);
}

TEST_CASE("timing is opt-in so default output stays reproducible") {
  CliRun plain = run_cli("classify --u 3 --v 2");
  for (const auto& rec : json_lines(plain.out))
    CHECK(!rec.contains("elapsed_ms"));
  CliRun timed = run_cli("classify --u 3 --v 2 --timing");
  for (const auto& rec : json_lines(timed.out))
    CHECK(rec.contains("elapsed_ms"));
}
