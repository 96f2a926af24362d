/*
   Copyright 2026 The invlab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef INVLAB_ERRORS_HPP
#define INVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace invlab {

/// Base class for all invlab exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent user input (scenario files, polynomial text,
/// ill-shaped matrices, non-invariant ideal generators). CLI exit code 3.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured work budget was exhausted (Groebner pair queue, group closure
/// cap, monomial budget, degree overflow). Never a wrong answer. Exit code 2.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// A truncation colimit did not reach a verdict within t_max. Carries the
/// full observation sequence for the audit trail. Exit code 2.
class UndeterminedError : public Error {
public:
    UndeterminedError(const std::string& msg, std::string observations_json)
        : Error(msg), observations(std::move(observations_json)) {}
    std::string observations;
};

/// A graded component known to be divergent was used where a finite slice is
/// required (Koszul strands, multiplication actions).
class DivergentSliceError : public Error {
public:
    using Error::Error;
};

} // namespace invlab

#endif
