// Copyright 2026 The OMT Authors
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

// Command-line front end: classify, elicit, verify-encodings,
// export-ontology, explain and serve.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "httplib.h"
#include "json.hpp"
#include "omt/classifier.h"
#include "omt/lp_format.h"
#include "omt/omt_tree.h"
#include "omt/owl.h"
#include "omt/rational.h"
#include "omt/service.h"
#include "omt/session.h"
#include "omt/verification.h"

namespace {

using nlohmann::json;

enum ExitCode {
  kOk = 0,
  kParseError = 1,
  kValidationError = 2,
  kScriptError = 3,
  kIoError = 4,
  kBindError = 5,
  kSuiteFailure = 6,
};

bool ReadFile(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  *out = ss.str();
  return true;
}

// "-" means standard output.
bool WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out.flush());
}

int Fail(bool as_json, int exit_code, std::string_view code,
         absl::string_view message, std::optional<int> step = std::nullopt) {
  if (as_json) {
    std::cout << omt::ErrorEnvelope(code, std::string(message), std::nullopt, step).dump(2)
              << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return exit_code;
}

int RunClassify(const std::string& path, bool as_json) {
  std::string text;
  if (!ReadFile(path, &text)) {
    return Fail(as_json, kIoError, "IO_ERROR",
                absl::StrCat("cannot read ", path));
  }
  absl::StatusOr<omt::Model> m = omt::ParseLp(text);
  if (!m.ok()) {
    return Fail(as_json, kParseError, "PARSE_ERROR",
                absl::StrCat(path, ": ", m.status().message()));
  }
  if (omt::ValidationReport r = omt::Validate(*m); !r.ok()) {
    return Fail(as_json, kValidationError, "VALIDATION_ERROR", r.ToString());
  }
  const omt::ClassificationResult result = omt::ClassifyModel(*m);
  std::cout << (as_json ? omt::ClassificationToJson(result)
                        : omt::ClassificationToTable(result));
  return kOk;
}

void PrintQuestion(const omt::Question& q) {
  std::cout << "\n[" << q.node_id << "] " << q.label << "\n" << q.text << "\n";
  if (q.is_leaf) {
    std::cout << "Parameters (one JSON object):\n";
    for (const omt::LeafParam& p : q.params) {
      std::cout << "  " << p.spec.name << ": "
                << omt::ParamTypeName(p.spec.type)
                << (p.spec.required ? "" : " (optional)");
      if (!p.spec.choices.empty()) {
        std::cout << " one of " << json(p.spec.choices).dump();
      }
      std::cout << "\n";
    }
  } else {
    for (size_t i = 0; i < q.choices.size(); ++i) {
      std::cout << "  " << i << ") " << q.choices[i] << "\n";
    }
  }
  std::cout << "Also: back, restart, finish.\n> " << std::flush;
}

// Reads answers line by line until the session completes or input ends.
// Invalid answers are reported and the question is asked again.
omt::Session InteractiveSession(const omt::OmtTree& tree) {
  omt::Session s = omt::Session::Start(tree);
  std::string line;
  while (!s.complete()) {
    absl::StatusOr<omt::Question> q = s.CurrentQuestion();
    if (!q.ok()) break;
    PrintQuestion(*q);
    if (!std::getline(std::cin, line)) break;
    const std::string input(absl::StripAsciiWhitespace(line));
    if (input.empty()) continue;
    omt::Answer answer;
    int choice;
    if (input == "back") {
      answer = omt::Answer::Nav(omt::Navigation::kBack);
    } else if (input == "restart") {
      answer = omt::Answer::Nav(omt::Navigation::kRestartBranch);
    } else if (input == "finish") {
      answer = omt::Answer::Nav(omt::Navigation::kFinishBranch);
    } else if (absl::SimpleAtoi(input, &choice)) {
      answer = omt::Answer::Choice(choice);
    } else {
      json params = json::parse(input, nullptr, /*allow_exceptions=*/false);
      if (params.is_discarded() || !params.is_object()) {
        std::cout << "not an answer: expected a number, a JSON object or a "
                     "command\n";
        continue;
      }
      answer = omt::Answer::Params(std::move(params));
    }
    if (absl::Status st = s.Apply(answer); !st.ok()) {
      std::cout << "rejected: " << st.message() << "\n";
    }
  }
  return s;
}

int RunElicit(const std::string& script_path, const std::string& out_path) {
  const omt::OmtTree& tree = omt::DefaultTree();
  absl::StatusOr<omt::Model> model;
  if (!script_path.empty()) {
    std::string text;
    if (!ReadFile(script_path, &text)) {
      return Fail(false, kIoError, "IO_ERROR",
                  absl::StrCat("cannot read ", script_path));
    }
    absl::StatusOr<std::vector<omt::Answer>> script = omt::ParseScript(text);
    if (!script.ok()) {
      return Fail(false, kParseError, "PARSE_ERROR",
                  absl::StrCat(script_path, ": ", script.status().message()));
    }
    omt::ReplayResult r = omt::Replay(tree, *script);
    if (r.failed_step >= 0) {
      return Fail(false, kScriptError, omt::ErrorCode(r.model.status()),
                  r.model.status().message(), r.failed_step);
    }
    model = std::move(r.model);
  } else {
    model = InteractiveSession(tree).EmitModel();
  }
  if (!model.ok()) {
    return Fail(false, kScriptError, omt::ErrorCode(model.status()),
                model.status().message());
  }
  if (!WriteOutput(out_path, omt::WriteLp(*model))) {
    return Fail(false, kIoError, "IO_ERROR",
                absl::StrCat("cannot write ", out_path));
  }
  return kOk;
}

int RunVerify(int max_n, int per_n, const std::string& fault_big_m) {
  omt::VerifyOptions options;
  options.max_n = max_n;
  options.instances_per_n = per_n;
  if (!fault_big_m.empty()) {
    absl::StatusOr<omt::Rational> m = omt::ParseRational(fault_big_m);
    if (!m.ok()) {
      return Fail(false, kParseError, "PARSE_ERROR", m.status().message());
    }
    options.forced_big_m = *m;
  }
  absl::StatusOr<omt::VerifyReport> report = omt::VerifyEncodings(options);
  if (!report.ok()) {
    return Fail(false, kSuiteFailure, "INTERNAL", report.status().message());
  }
  std::cout << report->ToString();
  return report->ok() ? kOk : kSuiteFailure;
}

int RunExportOntology(const std::string& out_path) {
  absl::StatusOr<std::string> owl = omt::WriteOwl(omt::DefaultOntology());
  if (!owl.ok()) {
    return Fail(false, kValidationError, "VALIDATION_ERROR",
                owl.status().message());
  }
  if (!WriteOutput(out_path, *owl)) {
    return Fail(false, kIoError, "IO_ERROR",
                absl::StrCat("cannot write ", out_path));
  }
  return kOk;
}

int RunExplain(const std::string& tag) {
  absl::StatusOr<std::string> text = omt::ExplainTag(tag);
  if (!text.ok()) {
    return Fail(false, kValidationError, "NOT_FOUND", text.status().message());
  }
  std::cout << *text << "\n";
  return kOk;
}

int RunServe(int port) {
  const omt::OmtTree& tree = omt::DefaultTree();
  omt::SessionStore store(tree, omt::SessionTtlFromEnv());
  httplib::Server server;
  omt::RegisterRoutes(server, tree, store);
  if (!server.bind_to_port("0.0.0.0", port)) {
    return Fail(false, kBindError, "BIND_ERROR",
                absl::StrCat("cannot bind port ", port));
  }
  std::cerr << json{{"event", "listening"}, {"port", port}}.dump() << std::endl;
  server.listen_after_bind();
  return kOk;
}

int DefaultPort() {
  int port = 8080;
  if (const char* v = std::getenv("OMT_PORT")) {
    if (!absl::SimpleAtoi(v, &port)) port = 8080;
  }
  return port;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimization modelling tree toolkit"};
  app.require_subcommand(1);

  std::string classify_path;
  bool classify_json = false;
  CLI::App* classify =
      app.add_subcommand("classify", "Tag the constraints of an LP file");
  classify->add_option("model", classify_path, "LP file")->required();
  classify->add_flag("--json", classify_json, "JSON output");

  std::string script_path, elicit_out;
  CLI::App* elicit =
      app.add_subcommand("elicit", "Build a model by answering questions");
  elicit->add_option("--script", script_path, "JSON answer script");
  elicit->add_option("--out", elicit_out, "LP output file (default stdout)");

  int max_n = 10, per_n = 10;
  std::string fault_big_m;
  CLI::App* verify = app.add_subcommand(
      "verify-encodings", "Check logic encodings against truth tables");
  verify->add_option("--max-n", max_n, "Largest number of binaries")
      ->check(CLI::Range(1, 16));
  verify->add_option("--per-n", per_n, "Random instances per size")
      ->check(CLI::Range(1, 1000));
  verify->add_option("--fault-big-m", fault_big_m,
                     "Test hook: force every big-M to this value")
      ->group("");

  std::string owl_out = "milp.owl";
  CLI::App* ontology =
      app.add_subcommand("export-ontology", "Write the ontology as OWL/XML");
  ontology->add_option("--out", owl_out, "Output file, - for stdout");

  std::string tag;
  CLI::App* explain = app.add_subcommand("explain", "Describe a typology tag");
  explain->add_option("tag", tag, "Tag name")->required();

  int port = DefaultPort();
  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", port, "Port (default $OMT_PORT or 8080)");

  CLI11_PARSE(app, argc, argv);

  if (*classify) return RunClassify(classify_path, classify_json);
  if (*elicit) return RunElicit(script_path, elicit_out);
  if (*verify) return RunVerify(max_n, per_n, fault_big_m);
  if (*ontology) return RunExportOntology(owl_out);
  if (*explain) return RunExplain(tag);
  if (*serve) return RunServe(port);
  return kOk;
}
