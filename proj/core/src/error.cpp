// Copyright 2026 The zetacorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zetacorr/error.hpp"

namespace zetacorr {

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid-argument";
    case ErrorKind::kOutOfRange:
      return "out-of-range";
    case ErrorKind::kDomain:
      return "domain-error";
    case ErrorKind::kResource:
      return "resource-error";
    case ErrorKind::kBudget:
      return "budget-exceeded";
    case ErrorKind::kData:
      return "data-error";
    case ErrorKind::kIo:
      return "io-error";
  }
  return "unknown";
}

}  // namespace zetacorr
