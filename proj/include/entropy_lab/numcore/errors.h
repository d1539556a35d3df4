/*
 * Copyright 2026 The Entropy Lab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ENTROPY_LAB_NUMCORE_ERRORS_H_
#define ENTROPY_LAB_NUMCORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace entropy_lab {

// Root of every error raised by the library. The CLI maps ConfigError to exit
// code 2 and every other Error to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of operands do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A statistic is not defined for the given input (constant vector, single
// cluster, ...).
class UndefinedError : public Error {
 public:
  using Error::Error;
};

// An operation was called without its precondition holding.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed or unknown configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace entropy_lab

#endif  // ENTROPY_LAB_NUMCORE_ERRORS_H_
