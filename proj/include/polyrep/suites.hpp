/*
   Copyright 2026 The polyrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "polyrep/homology.hpp"
#include "polyrep/polyrep.hpp"
#include "polyrep/report.hpp"

namespace polyrep {

struct SuiteConfig {
  unsigned p = 2;
  std::optional<int> n;     // overrides the per-instance context size
  int r = 1;
  std::optional<int> cap;   // invariant search cap
  std::optional<int> dmax;  // degree bound for the enumerating suites
  std::uint64_t seed = 1;
  // Build the instance inputs only; the report stays empty.
  bool objects_only = false;
};

struct SuiteInfo {
  std::string name;
  std::string summary;
  bool uses_p;  // false when the suite pins its own characteristics
};

const std::vector<SuiteInfo>& suite_registry();
bool has_suite(const std::string& name);

struct SuiteResult {
  Report report;
  // every input module the suite built, for the property checks
  std::vector<PolyRepPtr> objects;
};

// InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

// Comodule laws, duality involution, twist functoriality, Jordan-Holder
// agreement and resolution exactness on each object. Objects whose
// serialization hash is already in `seen` are skipped.
Report property_checks(const std::vector<PolyRepPtr>& objects,
                       std::unordered_set<std::size_t>* seen = nullptr);

// i(F,1) and i(F,2) at p = 2 over the nine degree-4 functors, in the
// published column order.
struct InvariantTable {
  std::vector<std::string> columns;
  std::vector<int> rs;
  std::vector<std::vector<InvariantValue>> rows;
  std::string to_csv() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& table_functors();
const std::vector<std::vector<int>>& table_expected();
InvariantTable invariant_table(int n = 4, std::optional<int> cap = {},
                               DetectTarget target = DetectTarget::T);

}  // namespace polyrep
