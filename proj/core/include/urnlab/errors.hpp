// Copyright 2026 The Urnlab Authors.
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

#ifndef URNLAB_ERRORS_HPP_
#define URNLAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace urnlab {

/// Conditioning on an event of probability zero.
class conditioning_error : public std::domain_error {
 public:
  explicit conditioning_error(const std::string& what) : std::domain_error(what) {}
};

/// A simulation produced no usable samples for the requested estimate.
class estimation_error : public std::runtime_error {
 public:
  explicit estimation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace urnlab

#endif  // URNLAB_ERRORS_HPP_
