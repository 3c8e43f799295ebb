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

#ifndef OMT_OWL_H_
#define OMT_OWL_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace omt {

// Classes and relations of the MILP ontology. Pairs are (child, parent) for
// subclass_of and (part, whole) for part_of.
struct OntologyDescriptor {
  std::string iri = "http://omt.example.org/milp";
  std::vector<std::string> classes;
  std::vector<std::pair<std::string, std::string>> subclass_of;
  std::vector<std::pair<std::string, std::string>> part_of;
};

// MILP core classes plus one subclass of Constraint per typology tag.
OntologyDescriptor DefaultOntology();

// OWL/XML, four-space indentation. InvalidArgument on an empty descriptor or
// a pair that names an undeclared class.
absl::StatusOr<std::string> WriteOwl(const OntologyDescriptor& d);

// Drops whitespace between XML tags and collapses other runs to one space.
std::string NormalizeXmlWhitespace(std::string_view xml);

}  // namespace omt

#endif  // OMT_OWL_H_
