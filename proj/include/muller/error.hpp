/*
 * Copyright 2026 The muller authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace muller {

/// Failure categories; the CLI maps each one to an exit code.
enum class ErrorKind {
    MalformedInput,
    Unsupported,
    Precondition,
    ScaleGuard,
    Violation,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Error malformed(const std::string& what) { return Error(ErrorKind::MalformedInput, what); }
inline Error unsupported(const std::string& what) { return Error(ErrorKind::Unsupported, what); }
inline Error precondition(const std::string& what) { return Error(ErrorKind::Precondition, what); }
inline Error scale_guard(const std::string& what) { return Error(ErrorKind::ScaleGuard, what); }

} // namespace muller
