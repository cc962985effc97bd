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

#include "polyrep/report.hpp"

namespace polyrep {

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified:
      return "verified";
    case Status::Failed:
      return "failed";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

void Report::add(std::string name, bool ok, nlohmann::json witness) {
  add(std::move(name), ok ? Status::Verified : Status::Failed,
      std::move(witness));
}

void Report::add(std::string name, Status s, nlohmann::json witness) {
  instances.push_back({std::move(name), s, std::move(witness)});
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& i : other.instances)
    instances.push_back({prefix + i.name, i.status, i.witness});
}

Status Report::status() const {
  Status s = Status::Verified;
  for (const auto& i : instances) {
    if (i.status == Status::Failed) return Status::Failed;
    if (i.status == Status::Inconclusive) s = Status::Inconclusive;
  }
  return s;
}

nlohmann::json Report::to_json() const {
  nlohmann::json inst = nlohmann::json::array();
  nlohmann::json wit = nlohmann::json::object();
  for (const auto& i : instances) {
    inst.push_back({{"name", i.name}, {"status", to_string(i.status)}});
    wit[i.name] = i.witness;
  }
  return {{"claim", claim},
          {"instances", inst},
          {"status", to_string(status())},
          {"witness", wit}};
}

}  // namespace polyrep
