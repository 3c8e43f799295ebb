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

#include "omt/owl.h"

#include <cctype>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "omt/typology.h"

namespace omt {
namespace {

constexpr char kPartOf[] = "part_of";

void AppendClass(std::string* out, int depth, const std::string& name) {
  absl::StrAppend(out, std::string(4 * depth, ' '), "<Class IRI=\"#", name,
                  "\"/>\n");
}

void AppendPartOf(std::string* out, int depth) {
  absl::StrAppend(out, std::string(4 * depth, ' '),
                  "<ObjectProperty IRI=\"#", kPartOf, "\"/>\n");
}

}  // namespace

OntologyDescriptor DefaultOntology() {
  OntologyDescriptor d;
  d.classes = {"MILP",           "ProblemSense", "ObjectiveFunction",
               "Constraint",     "LinearFunction", "Coefficient",
               "Operator",       "DecisionVariable", "NumberType",
               "IndexSet",       "Iterator",       "Sense"};
  for (const TypologyTag& tag : AllTags()) {
    d.classes.emplace_back(tag.name);
    d.subclass_of.emplace_back(std::string(tag.name), "Constraint");
  }
  d.part_of = {
      {"ProblemSense", "MILP"},
      {"ObjectiveFunction", "MILP"},
      {"Constraint", "MILP"},
      {"Sense", "Constraint"},
      {"LinearFunction", "Constraint"},
      {"Iterator", "Constraint"},
      {"LinearFunction", "ObjectiveFunction"},
      {"Coefficient", "LinearFunction"},
      {"Operator", "LinearFunction"},
      {"DecisionVariable", "LinearFunction"},
      {"NumberType", "DecisionVariable"},
      {"IndexSet", "DecisionVariable"},
      {"NumberType", "Coefficient"},
      {"IndexSet", "Coefficient"},
  };
  return d;
}

absl::StatusOr<std::string> WriteOwl(const OntologyDescriptor& d) {
  if (d.classes.empty()) {
    return absl::InvalidArgumentError("ontology has no classes");
  }
  const std::set<std::string> known(d.classes.begin(), d.classes.end());
  auto check = [&](const std::pair<std::string, std::string>& p,
                   std::string_view relation) -> absl::Status {
    for (const std::string& name : {p.first, p.second}) {
      if (!known.contains(name)) {
        return absl::InvalidArgumentError(
            absl::StrCat(std::string(relation), " references undeclared class '",
                         name, "'"));
      }
    }
    return absl::OkStatus();
  };
  for (const auto& p : d.subclass_of) {
    if (absl::Status s = check(p, "subclass_of"); !s.ok()) return s;
  }
  for (const auto& p : d.part_of) {
    if (absl::Status s = check(p, kPartOf); !s.ok()) return s;
  }

  std::string out = "<?xml version=\"1.0\"?>\n";
  absl::StrAppend(&out, "<Ontology xmlns=\"http://www.w3.org/2002/07/owl#\"\n",
                  "     xml:base=\"", d.iri, "\"\n",
                  "     ontologyIRI=\"", d.iri, "\">\n");
  for (const std::string& c : d.classes) {
    out += "    <Declaration>\n";
    AppendClass(&out, 2, c);
    out += "    </Declaration>\n";
  }
  if (!d.part_of.empty()) {
    out += "    <Declaration>\n";
    AppendPartOf(&out, 2);
    out += "    </Declaration>\n";
  }
  for (const auto& [child, parent] : d.subclass_of) {
    out += "    <SubClassOf>\n";
    AppendClass(&out, 2, child);
    AppendClass(&out, 2, parent);
    out += "    </SubClassOf>\n";
  }
  for (const auto& [part, whole] : d.part_of) {
    out += "    <SubClassOf>\n";
    AppendClass(&out, 2, part);
    out += "        <ObjectSomeValuesFrom>\n";
    AppendPartOf(&out, 3);
    AppendClass(&out, 3, whole);
    out += "        </ObjectSomeValuesFrom>\n";
    out += "    </SubClassOf>\n";
  }
  out += "</Ontology>\n";
  return out;
}

std::string NormalizeXmlWhitespace(std::string_view xml) {
  std::string out;
  bool pending_space = false;
  for (char c : xml) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty() && out.back() != '>' && c != '<') {
      out += ' ';
    }
    pending_space = false;
    out += c;
  }
  return out;
}

}  // namespace omt
