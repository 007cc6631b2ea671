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

#include "digitop/error.h"

namespace digitop {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kBadAdjacency: return "BadAdjacency";
    case ErrorCode::kBadCycleLength: return "BadCycleLength";
    case ErrorCode::kBadEdge: return "BadEdge";
    case ErrorCode::kNotEmbedded: return "NotEmbedded";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kUnclassifiable: return "Unclassifiable";
    case ErrorCode::kNotAValidTriple: return "NotAValidTriple";
    case ErrorCode::kNotAnMMap: return "NotAnMMap";
    case ErrorCode::kNotAProduct: return "NotAProduct";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace digitop
