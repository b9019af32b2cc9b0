/*
 * Copyright (C) 2026 The lscsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lscsim {

/// Base class for all lscsim errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input data; carries the 1-based line number when known.
struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    explicit ParseError(const std::string& what) : Error(what), line(0) {}
    std::size_t line;
};

/// File or stream could not be read/written.
struct IoError : Error {
    using Error::Error;
};

/// A word required by a change measure is absent from a space (or has a
/// zero vector). Callers record the lemma as unpredictable instead of
/// aborting the run.
struct MissingWordError : Error {
    using Error::Error;
};

}  // namespace lscsim
