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

#include <string>
#include <vector>

#include <json.hpp>

namespace polyrep {

enum class Status { Verified, Failed, Inconclusive };

std::string to_string(Status s);

struct Instance {
  std::string name;
  Status status = Status::Verified;
  nlohmann::json witness = nlohmann::json::object();
};

// Outcome of checking a claim on a list of instances.
struct Report {
  std::string claim;
  std::vector<Instance> instances;

  Report() = default;
  explicit Report(std::string c) : claim(std::move(c)) {}

  void add(std::string name, bool ok,
           nlohmann::json witness = nlohmann::json::object());
  void add(std::string name, Status s,
           nlohmann::json witness = nlohmann::json::object());
  void absorb(const Report& other, const std::string& prefix = {});
  // failed dominates inconclusive, which dominates verified
  Status status() const;
  nlohmann::json to_json() const;
};

}  // namespace polyrep
