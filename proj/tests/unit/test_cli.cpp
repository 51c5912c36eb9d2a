// Copyright 2026 The kchlint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "support.h"

using test_support::read_file;
using test_support::write_file;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  auto err_path = std::filesystem::temp_directory_path() /
                  ("kchlint-cli-err-" + std::to_string(++counter));
  std::string cmd = env + " '" + std::string(KCHLINT_CLI_PATH) + "' " + args + " 2>'" +
                    err_path.string() + "'";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = read_file(err_path);
  std::filesystem::remove(err_path);
  return r;
}

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("check: exit codes and text output") {
  auto dir = test_support::scratch_dir("cli-check");
  write_file(dir / "clean.py", "import pandas as pd\ndf = pd.read_csv('a.csv')\n");
  write_file(dir / "bad.py", "import pandas as pd\npd.read_exel('data.csv')\n");
  write_file(dir / "broken.py", "def f(:\n");

  Run clean = cli("check " + q(dir / "clean.py"));
  CHECK(clean.code == 0);
  CHECK(clean.out.empty());

  Run bad = cli("check " + q(dir / "bad.py"));
  CHECK(bad.code == 1);
  CHECK(bad.out == (dir / "bad.py").string() +
                       ":2:4: UnknownApi 'read_exel' is not a callable of pandas " +
                       "2.3.3; '.csv' argument implies read_csv [suggestion: read_csv]\n");

  CHECK(cli("check " + q(dir / "missing.py")).code == 2);
  Run broken = cli("check " + q(dir / "broken.py"));
  CHECK(broken.code == 2);
  CHECK(broken.err.find("1:7") != std::string::npos);
  CHECK(cli("").code == 2);
  CHECK(cli("check").code == 2);
}

TEST_CASE("check: json output is stable") {
  auto dir = test_support::scratch_dir("cli-json");
  write_file(dir / "bad.py", "import numpy as np\nx = np.arrya([1])\ny = read_csv('a.csv')\n");
  Run a = cli("--format json check " + q(dir / "bad.py"));
  Run b = cli("--format json check " + q(dir / "bad.py"));
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["file"] == (dir / "bad.py").string());
  CHECK(j[1]["category"] == "BareCriticalCall");
  CHECK(j[1]["suggestion"]["required_import"]["alias"] == "pd");
}

TEST_CASE("fix: stdout, diff, in-place") {
  auto dir = test_support::scratch_dir("cli-fix");
  write_file(dir / "bad.py", "import pandas as pd\npd.read_exel('data.csv')\n");
  Run out = cli("fix --stdout " + q(dir / "bad.py"));
  CHECK(out.code == 1);
  CHECK(out.out == "import pandas as pd\npd.read_csv('data.csv')\n");
  CHECK(out.err.find("applied=1 unfixed=0") != std::string::npos);

  Run diff = cli("fix --diff " + q(dir / "bad.py"));
  CHECK(diff.code == 1);
  CHECK(diff.out.find("-pd.read_exel('data.csv')\n+pd.read_csv('data.csv')\n") !=
        std::string::npos);
  CHECK(diff.out.find("@@ -1,2 +1,2 @@") != std::string::npos);

  CHECK(cli("fix --diff --stdout " + q(dir / "bad.py")).code == 2);

  Run inplace = cli("fix --in-place " + q(dir / "bad.py"));
  CHECK(inplace.code == 1);
  CHECK(read_file(dir / "bad.py") == "import pandas as pd\npd.read_csv('data.csv')\n");
  Run again = cli("fix --in-place " + q(dir / "bad.py"));
  CHECK(again.code == 0);
}

TEST_CASE("fix: clean file bytes are untouched") {
  auto dir = test_support::scratch_dir("cli-fix-clean");
  std::string odd = "import numpy as np\n\n\nx=np.mean([1])   # keep\n";
  write_file(dir / "clean.py", odd);
  Run r = cli("fix --in-place " + q(dir / "clean.py"));
  CHECK(r.code == 0);
  CHECK(read_file(dir / "clean.py") == odd);
  CHECK(cli("fix --stdout " + q(dir / "clean.py")).out == odd);
}

TEST_CASE("fix: unfixable only") {
  auto dir = test_support::scratch_dir("cli-fix-unfixable");
  write_file(dir / "u.py", "import pandas as pd\npd.zzqq()\n");
  Run r = cli("fix " + q(dir / "u.py"));
  CHECK(r.code == 1);
  CHECK(r.err.find("applied=0 unfixed=1") != std::string::npos);
}

TEST_CASE("eval") {
  auto dir = test_support::scratch_dir("cli-eval");
  Run synth = cli("synth " + q(test_support::clean_corpus()) + " " + q(dir / "mi") +
                  " --kind missing-import --count 5 --seed 2");
  REQUIRE(synth.code == 0);
  Run text = cli("eval " + q(dir / "mi"));
  CHECK(text.code == 0);
  CHECK(text.out.find("precision 1.000") != std::string::npos);
  CHECK(text.out.find("fix accuracy 1.000") != std::string::npos);
  Run json = cli("--format json eval " + q(dir / "mi"));
  CHECK(json.code == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["tp"] == 5);
  CHECK_FALSE(j.contains("wall_time_seconds"));
  CHECK(cli("--format json eval " + q(dir / "mi")).out == json.out);
  CHECK(nlohmann::json::parse(cli("--timing --format json eval " + q(dir / "mi")).out)
            .contains("wall_time_seconds"));
  CHECK(cli("eval " + q(dir / "nothing")).code == 2);
}

TEST_CASE("kb: validate, merge, show") {
  auto dir = test_support::scratch_dir("cli-kb");
  std::string bundled = (test_support::data_dir() / "manifests" / "bundled.json").string();
  CHECK(cli("kb validate '" + bundled + "'").code == 0);

  write_file(dir / "broken.json", R"({"schema_version": 1, "libraries": {"x": {}}})");
  Run broken = cli("kb validate " + q(dir / "broken.json"));
  CHECK(broken.code == 2);
  CHECK(broken.err.find("/libraries/x/") != std::string::npos);

  write_file(dir / "a.json", R"({"schema_version": 1, "libraries": {"mylib": {"version": "1",
      "callables": ["alpha"]}}})");
  write_file(dir / "b.json", R"({"schema_version": 1, "libraries": {"mylib": {"version": "2",
      "callables": ["beta"]}}})");
  CHECK(cli("kb merge " + q(dir / "a.json") + " " + q(dir / "b.json") + " -o " +
            q(dir / "m.json"))
            .code == 0);
  Run show = cli("--no-bundled --kb " + q(dir / "m.json") + " kb show mylib");
  CHECK(show.code == 0);
  CHECK(show.out == "mylib 2\ncallables (2):\n  alpha\n  beta\n");

  Run layered = cli("--kb " + q(dir / "a.json") + " kb show");
  CHECK(layered.out.find("mylib") != std::string::npos);
  CHECK(layered.out.find("pandas") != std::string::npos);
  CHECK(cli("kb show nope").code == 2);
}

TEST_CASE("KCHLINT_KB_PATH layers extra manifests") {
  auto dir = test_support::scratch_dir("cli-env");
  write_file(dir / "extra.json", R"({"schema_version": 1, "libraries": {"mylib": {
      "version": "1", "canonical_alias": "ml", "callables": ["run"]}}})");
  write_file(dir / "s.py", "import mylib as ml\nml.runn()\n");
  CHECK(cli("check " + q(dir / "s.py")).code == 0);
  Run r = cli("check " + q(dir / "s.py"), "KCHLINT_KB_PATH=" + q(dir / "extra.json"));
  CHECK(r.code == 1);
  CHECK(r.out.find("[suggestion: run]") != std::string::npos);
}
