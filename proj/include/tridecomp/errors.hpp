// Copyright 2026 The tridecomp Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace tridecomp {

// Base for every error the library raises on purpose. Argument checks that
// are plain range/domain violations use std::domain_error directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Augmentation may only duplicate edges that already exist.
class AugmentNonAdjacent : public Error {
 public:
  using Error::Error;
};

// An edge lies on no triangle, so no augmentation on existing edges helps.
class EdgeNotOnTriangle : public Error {
 public:
  using Error::Error;
};

// The per-edge copy cap rules out every augmentation size up to the ceiling.
class CapInfeasible : public Error {
 public:
  using Error::Error;
};

// Odd-degree vertices cannot be paired through existing edges.
class InfeasibleParity : public Error {
 public:
  using Error::Error;
};

// Input is beyond what the exhaustive routines are willing to attempt.
class ScaleLimit : public Error {
 public:
  using Error::Error;
};

// The requested member of a family provably does not exist.
class ConstructionUnavailable : public Error {
 public:
  using Error::Error;
};

// Only a fixed set of transcribed toroidal fixtures is available.
class NotAFixture : public Error {
 public:
  using Error::Error;
};

// Malformed interchange document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tridecomp
