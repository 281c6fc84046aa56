// SPDX-License-Identifier: Apache-2.0
//
// radiomap: GP quantile maps and outage-constrained rate selection
// Copyright (C) 2026 The radiomap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radiomap {

/// Base class of every error raised by the library. `error_class()` is a
/// stable machine-readable name used by the CLI's single-line error report.
class Error : public std::runtime_error {
public:
    Error(std::string error_class, const std::string& message)
        : std::runtime_error(message), class_(std::move(error_class)) {}

    const std::string& error_class() const noexcept { return class_; }

private:
    std::string class_;
};

#define RADIOMAP_DEFINE_ERROR(Name)                                           \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& message) : Error(#Name, message) {}  \
    }

RADIOMAP_DEFINE_ERROR(InvalidArgument);
RADIOMAP_DEFINE_ERROR(InsufficientPoints);
RADIOMAP_DEFINE_ERROR(NonconformingSpacing);
RADIOMAP_DEFINE_ERROR(FactorizationFailure);
RADIOMAP_DEFINE_ERROR(InsufficientSamples);
RADIOMAP_DEFINE_ERROR(DegenerateVariance);
RADIOMAP_DEFINE_ERROR(FitDiverged);
RADIOMAP_DEFINE_ERROR(DomainError);
RADIOMAP_DEFINE_ERROR(GridMismatch);
RADIOMAP_DEFINE_ERROR(DegenerateCapacity);
RADIOMAP_DEFINE_ERROR(FileNotFound);
RADIOMAP_DEFINE_ERROR(FormatError);
RADIOMAP_DEFINE_ERROR(ConfigError);
RADIOMAP_DEFINE_ERROR(IoError);

#undef RADIOMAP_DEFINE_ERROR

/// Wraps a failure raised inside one Monte-Carlo realization. The original
/// error class is preserved so callers can still dispatch on it.
class RealizationError : public Error {
public:
    RealizationError(std::size_t realization, const Error& cause)
        : Error(cause.error_class(),
                "realization " + std::to_string(realization) + ": " + cause.what()),
          realization_(realization) {}

    std::size_t realization() const noexcept { return realization_; }

private:
    std::size_t realization_;
};

}  // namespace radiomap
