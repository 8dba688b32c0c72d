// Copyright 2026 The fairdec Authors
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

#ifndef FAIRDEC_ERRORS_HPP_
#define FAIRDEC_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace fairdec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a data-model invariant, or indices are out of range.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed the caller's cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, std::string search_space_size)
      : Error(std::move(what)), search_space_size_(std::move(search_space_size)) {}

  /// Exact size of the search space that was refused, as a decimal string.
  const std::string& search_space_size() const { return search_space_size_; }

 private:
  std::string search_space_size_;
};

/// The private-goods transfer loop cannot make progress.
class DegenerateInstance : public Error {
 public:
  using Error::Error;
};

}  // namespace fairdec

#endif  // FAIRDEC_ERRORS_HPP_
