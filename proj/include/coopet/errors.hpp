// Copyright 2026 The Coopet Authors
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

#ifndef COOPET_ERRORS_HPP
#define COOPET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coopet {

/// Base class for everything this library throws.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, unknown labels, violated preconditions that
/// originate in user-supplied data. The CLI maps these to exit code 2.
class input_error : public error {
 public:
  using error::error;
};

/// Malformed document text; carries whatever position info the parser had.
class parse_error : public input_error {
 public:
  using input_error::input_error;
};

}  // namespace coopet

#endif  // COOPET_ERRORS_HPP
