// Copyright 2026 The Armada Authors.
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

#ifndef ARMADA_ERROR_H_
#define ARMADA_ERROR_H_

#include <stdexcept>
#include <string>

namespace armada {

// Error categories. The numeric values are part of the C API (see c_api.h).
enum class ErrorCode : int {
  kUsage = 1,     // call made in the wrong state / with invalid arguments
  kConfig = 2,    // malformed configuration or target file
  kIo = 3,        // filesystem or pipe failure
  kOrdering = 4,  // rounds presented out of order
  kDomain = 5,    // numeric argument outside its domain
  kProtocol = 6,  // adapter spoke something we do not understand
  kCampaign = 7,  // campaign aborted
};

const char *ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string &message) {
  throw Error(code, message);
}

}  // namespace armada

#endif  // ARMADA_ERROR_H_
