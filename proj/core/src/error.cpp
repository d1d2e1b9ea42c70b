// Copyright 2026 The hgw Authors
//
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

#include "hgw/error.hpp"

namespace hgw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::EmptySide: return "EMPTY_SIDE";
    case ErrorCode::ZeroSide: return "ZERO_SIDE";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::MissingEntry: return "MISSING_ENTRY";
    case ErrorCode::InvalidSubtree: return "INVALID_SUBTREE";
    case ErrorCode::BadPartition: return "BAD_PARTITION";
    case ErrorCode::InternalLemmaViolation: return "INTERNAL_LEMMA_VIOLATION";
    case ErrorCode::BadHeight: return "BAD_HEIGHT";
    case ErrorCode::InvalidTree: return "INVALID_TREE";
    case ErrorCode::NotAssociative: return "NOT_ASSOCIATIVE";
    case ErrorCode::NoIdentity: return "NO_IDENTITY";
    case ErrorCode::NoInverse: return "NO_INVERSE";
    case ErrorCode::NotLatinSquare: return "NOT_LATIN_SQUARE";
    case ErrorCode::InvalidWitness: return "INVALID_WITNESS";
    case ErrorCode::NotNormal: return "NOT_NORMAL";
    case ErrorCode::MalformedPartition: return "MALFORMED_PARTITION";
    case ErrorCode::EmptyPart: return "EMPTY_PART";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::BadArgument: return "BAD_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace hgw
