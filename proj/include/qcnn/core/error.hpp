// Copyright 2026 The qcnn-reupload Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception hierarchy shared by all modules.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qcnn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dimension, index or length violation (qubit out of range, wrong slice length, ...).
class SizeError : public Error {
  public:
    using Error::Error;
};

/// Malformed or missing input data (bad IDX magic, truncated payload, missing file).
class DataError : public Error {
  public:
    using Error::Error;
};

/// Invalid configuration value or command line.
class ConfigError : public Error {
  public:
    using Error::Error;
};

} // namespace qcnn
