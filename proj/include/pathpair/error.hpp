// Copyright 2026 The pathpair Authors.
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

namespace pathpair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid constructor or generator arguments.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An exhaustive procedure was asked to run beyond its configured cap.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// The blow-up fails the prefix-cut inequality or the blob requirements, so no
// routing is attempted.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// The sweep router observed a weight structure that its correctness argument
// rules out. Never expected on valid inputs.
class InternalInvariantBreach : public Error {
 public:
  using Error::Error;
};

// An intermediate blob could not join the demands handed to it.
class InnerRoutingFailed : public Error {
 public:
  using Error::Error;
};

// An endpoint carries more paths than it has free edges into the next blob.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pathpair
