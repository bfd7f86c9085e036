// include/spoofkit/error.h

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

#ifndef SPOOFKIT_ERROR_H_
#define SPOOFKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace spoofkit {

enum class ErrorKind {
  // audio io
  MissingFile,
  NotWav,
  UnsupportedFormat,
  IoError,
  EmptyAudio,
  // features
  TooShort,
  BadMagic,
  ShapeMismatch,
  DegenerateFilter,
  BadConfig,
  // augmentation
  SilentInput,
  RateMismatch,
  EmptyRir,
  // splicing
  BadPosition,
  CrossfadeTooLong,
  GapInLabels,
  // scoring
  EmptyFeature,
  MissingClass,
  TooFewExamples,
  DimMismatch,
  // evaluation / fusion
  MissingScore,
  SingleClass,
  IdMismatch,
  EmptySet,
  DegenerateSpread,
};

const char* error_kind_name(ErrorKind kind);

// Single exception type for the whole toolkit; the kind is what tests and
// callers dispatch on, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingFile: return "MissingFile";
    case ErrorKind::NotWav: return "NotWav";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::EmptyAudio: return "EmptyAudio";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::BadMagic: return "BadMagic";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DegenerateFilter: return "DegenerateFilter";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::SilentInput: return "SilentInput";
    case ErrorKind::RateMismatch: return "RateMismatch";
    case ErrorKind::EmptyRir: return "EmptyRir";
    case ErrorKind::BadPosition: return "BadPosition";
    case ErrorKind::CrossfadeTooLong: return "CrossfadeTooLong";
    case ErrorKind::GapInLabels: return "GapInLabels";
    case ErrorKind::EmptyFeature: return "EmptyFeature";
    case ErrorKind::MissingClass: return "MissingClass";
    case ErrorKind::TooFewExamples: return "TooFewExamples";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::MissingScore: return "MissingScore";
    case ErrorKind::SingleClass: return "SingleClass";
    case ErrorKind::IdMismatch: return "IdMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::DegenerateSpread: return "DegenerateSpread";
  }
  return "Unknown";
}

}  // namespace spoofkit

#endif  // SPOOFKIT_ERROR_H_
