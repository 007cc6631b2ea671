// Copyright 2026 The digitop Authors
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

#ifndef DIGITOP_ERROR_H_
#define DIGITOP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace digitop {

enum class ErrorCode {
  kBudgetExceeded,
  kBadAdjacency,
  kBadCycleLength,
  kBadEdge,
  kNotEmbedded,
  kDisconnected,
  kDomainMismatch,
  kNotACycle,
  kUnclassifiable,
  kNotAValidTriple,
  kNotAnMMap,
  kNotAProduct,
  kEmptySubset,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. The code is the
// machine-readable part; the message names the offending input.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace digitop

#endif  // DIGITOP_ERROR_H_
