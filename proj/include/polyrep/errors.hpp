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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define POLYREP_ERROR(Name)                  \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  };

POLYREP_ERROR(DimensionMismatch)
POLYREP_ERROR(ContextMismatch)
POLYREP_ERROR(ContextTooSmall)
POLYREP_ERROR(FormatError)
POLYREP_ERROR(BadWeight)
POLYREP_ERROR(NotStable)
POLYREP_ERROR(BudgetExceeded)
POLYREP_ERROR(NotRestricted)
POLYREP_ERROR(DegreeMismatch)
POLYREP_ERROR(OddCharRequired)
POLYREP_ERROR(HeadNotRestricted)
POLYREP_ERROR(AssertFailure)
POLYREP_ERROR(CoverFailure)
POLYREP_ERROR(InvalidArgument)

#undef POLYREP_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  // 1-based
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace polyrep
