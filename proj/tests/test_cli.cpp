/*
 * Copyright 2026 The bayeserr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs the command-line tool as a subprocess.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Workdir {
 public:
  Workdir() {
    dir_ = fs::temp_directory_path() /
           ("bayeserr_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(dir_);
  }
  ~Workdir() { fs::remove_all(dir_); }

  fs::path file(const std::string& name, const std::string& content = "") const {
    const auto p = dir_ / name;
    if (!content.empty()) std::ofstream(p, std::ios::binary) << content;
    return p;
  }

  Run run(const std::string& args) const {
    const auto out = dir_ / "stdout.txt";
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string("\"") + BAYESERR_CLI_PATH + "\" " + args + " >\"" +
                            out.string() + "\" 2>\"" + err.string() + "\"";
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("cli eer") {
  Workdir w;
  const auto f = w.file("sep.txt", "tar 1\ntar 2\ntar 3\nnon -3\nnon -2\nnon -1\n");
  const auto r = w.run("eer " + f.string());
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");

  const auto t = w.file("t.txt", "2\n0\n1\n");
  const auto n = w.file("n.txt", "-1\n0.5\n-2\n");
  const auto split = w.run("eer --tar " + t.string() + " --non " + n.string());
  CHECK(split.status == 0);
  CHECK(split.out == "0.166666667\n");
}

TEST_CASE("cli dcf") {
  Workdir w;
  const auto f = w.file("s.txt", "tar 1\ntar 2\nnon -2\nnon 0.5\n");
  const auto r = w.run("dcf --calibrated --prior 0.5 " + f.string());
  CHECK(r.status == 0);
  CHECK(r.out == "actual_risk 0.25\nmin_risk 0\nmin_risk_threshold 0.75\n");
  const auto raw = w.run("dcf --prior 0.5 " + f.string());
  CHECK(raw.status == 0);
  CHECK(raw.out.rfind("actual_risk n/a\n", 0) == 0);
}

TEST_CASE("cli bep on raw scores leaves actual_risk empty") {
  Workdir w;
  const auto f = w.file("s.txt", "tar 1\ntar 2\nnon -2\nnon 0.5\n");
  const auto r = w.run("bep --grid-n 3 --grid-lo -1 --grid-hi 1 " + f.string());
  CHECK(r.status == 0);
  CHECK(r.out.rfind("logit_prior,prior,actual_risk,min_risk,bound\n-1,0.268941421,,0,0\n", 0) == 0);
}

TEST_CASE("cli exit codes") {
  Workdir w;
  CHECK(w.run("").status == 1);
  CHECK(w.run("frobnicate").status == 1);
  CHECK(w.run("dcf --prior 2 x.txt").status == 1);
  CHECK(w.run("--help").status == 0);

  const auto bad = w.file("bad.txt", "tar 1\nnon 1\nwho 3\n");
  const auto r = w.run("eer " + bad.string());
  CHECK(r.status == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(w.run("eer " + (w.file("missing.txt")).string()).status == 2);

  const auto s = w.file("s.txt", "tar 1\nnon 0\n");
  CHECK(w.run("threshold " + s.string()).status == 1);  // neither selection rule
}

TEST_CASE("cli rocdet and threshold") {
  Workdir w;
  const auto f = w.file("s.txt", "tar 1\nnon -1\n");
  const auto roc = w.file("roc.csv");
  const auto det = w.file("det.csv");
  CHECK(w.run("rocdet " + f.string() + " --roc " + roc.string() + " --det " + det.string())
            .status == 0);
  CHECK(slurp(roc) == "threshold,pmiss,pfa\n-inf,0,1\n-1,0,1\n1,0,0\ninf,1,0\n");
  CHECK(slurp(det).rfind("probit_pfa,probit_pmiss\n", 0) == 0);

  const auto cal = w.file("cal.txt", "tar 1\ntar 2\nnon -2\nnon 0.5\n");
  const auto test = w.file("test.txt", "tar -0.5\ntar 1\nnon 0.2\nnon -1\n");
  const auto r = w.run("threshold --min-dcf --prior 0.5 " + cal.string() + " " + test.string());
  CHECK(r.status == 0);
  CHECK(r.out == "threshold,cal_pmiss,cal_pfa,test_pmiss,test_pfa,test_risk\n0.75,0,0,0.5,0,0.25\n");
  const auto fa = w.run("threshold --fix-fa-rate 0.5 " + cal.string());
  CHECK(fa.out == "threshold,cal_pmiss,cal_pfa,test_pmiss,test_pfa,test_risk\n0.5,0,0.5,,,\n");
}

TEST_CASE("cli simulate writes scores and a sidecar") {
  Workdir w;
  const auto out = w.file("sim.txt");
  const auto r = w.run("simulate --eer 0.1 --ntar 5 --nnon 7 --seed 3 -o " + out.string());
  CHECK(r.status == 0);
  const auto text = slurp(out);
  std::size_t tar = 0, non = 0;
  std::istringstream lines(text);
  std::string label, score;
  while (lines >> label >> score) (label == "tar" ? tar : non) += 1;
  CHECK(tar == 5);
  CHECK(non == 7);
  const auto json = slurp(out.string() + ".json");
  CHECK(json.find("\"target_eer\": 0.1") != std::string::npos);
  CHECK(json.find("\"seed\": 3") != std::string::npos);
}
