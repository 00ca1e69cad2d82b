/*
   Copyright 2026 The regbound authors

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

#ifndef REGBOUND_ERRORS_HPP
#define REGBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace regbound {

/// A configured resource cap (step count, search box, iteration limit)
/// was exceeded.
struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

/// No two randomized trials agreed on a generic initial ideal; raise the
/// trial count or enlarge the field.
struct GinConsensusError : std::runtime_error {
    explicit GinConsensusError(const std::string& what) : std::runtime_error(what) {}
};

/// A sampled linear form failed almost-regularity within the retry cap.
struct AlmostRegularError : std::runtime_error {
    explicit AlmostRegularError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace regbound

#endif
