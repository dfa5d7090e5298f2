// Copyright 2026 The gdma Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gdma {

// Malformed or inconsistent data: spec mismatches, non-bijective labellings,
// broken invariants.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-supplied parameters (out-of-range sizes, invalid connection sets).
struct ParameterError : std::runtime_error {
  explicit ParameterError(const std::string& what) : std::runtime_error(what) {}
};

// A constructor's sufficient conditions do not hold for the given input.
// Non-fatal: callers may fall back to exhaustive search.
struct HypothesisNotMet : std::runtime_error {
  explicit HypothesisNotMet(const std::string& what) : std::runtime_error(what) {}
};

// The requested labelling provably does not exist.
struct ObstructionError : std::runtime_error {
  ObstructionError(std::string kind_, std::string citation_, std::string narrative_)
      : std::runtime_error(narrative_),
        kind(std::move(kind_)),
        citation(std::move(citation_)),
        narrative(std::move(narrative_)) {}
  std::string kind;
  std::string citation;
  std::string narrative;
};

// No construction is known for this instance (open problem territory).
struct UnsupportedConstruction : std::runtime_error {
  explicit UnsupportedConstruction(const std::string& what) : std::runtime_error(what) {}
};

// A constructor produced a labelling that failed its own claim check.
struct VerificationMismatch : std::logic_error {
  explicit VerificationMismatch(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gdma
