// Copyright 2026 The mfsquad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mfsquad {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MFSQUAD_DEFINE_ERROR(Name)                            \
  struct Name : Error {                                       \
    explicit Name(const std::string& msg) : Error(msg) {}     \
  }

// Input / structural validation.
MFSQUAD_DEFINE_ERROR(NotSimple);
MFSQUAD_DEFINE_ERROR(CrossingEdges);
MFSQUAD_DEFINE_ERROR(DuplicateVertex);
MFSQUAD_DEFINE_ERROR(DegeneratePolygon);
MFSQUAD_DEFINE_ERROR(NoNonIncidentPair);

// Pipeline-internal failures (must not occur for valid input).
MFSQUAD_DEFINE_ERROR(OffsetTooLarge);
MFSQUAD_DEFINE_ERROR(OffsetCollapse);
MFSQUAD_DEFINE_ERROR(GridPointOutsideCircle);
MFSQUAD_DEFINE_ERROR(SelfIntersectingInner);
MFSQUAD_DEFINE_ERROR(ChordCrossing);
MFSQUAD_DEFINE_ERROR(InternalError);

// Lab / generators.
MFSQUAD_DEFINE_ERROR(OddN);
MFSQUAD_DEFINE_ERROR(TooLarge);
MFSQUAD_DEFINE_ERROR(GenerationBudgetExceeded);

// File handling.
MFSQUAD_DEFINE_ERROR(IoError);

#undef MFSQUAD_DEFINE_ERROR

}  // namespace mfsquad
