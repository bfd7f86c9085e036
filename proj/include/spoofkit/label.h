// include/spoofkit/label.h

// Copyright 2026  Spoofkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SPOOFKIT_LABEL_H_
#define SPOOFKIT_LABEL_H_

#include <string>

#include "spoofkit/error.h"

namespace spoofkit {

enum class Label { Genuine, Fake };

inline const char* label_name(Label l) {
  return l == Label::Genuine ? "genuine" : "fake";
}

inline Label label_from_name(const std::string& s) {
  if (s == "genuine") return Label::Genuine;
  if (s == "fake") return Label::Fake;
  throw Error(ErrorKind::BadConfig, "label must be genuine or fake, got: " + s);
}

}  // namespace spoofkit

#endif  // SPOOFKIT_LABEL_H_
