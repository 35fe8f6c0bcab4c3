// SPDX-License-Identifier: Apache-2.0
//
// bendbeam: near-field bending beams and physical layer security
// Copyright (C) 2026 The bendbeam authors
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

#ifndef BENDBEAM_ERROR_HPP
#define BENDBEAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bendbeam
{
    // Input lies outside the physical validity range of an operation
    // (phase radicand negative, observation on an element, empty window, ...).
    class domain_error : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Malformed or inconsistent configuration.
    class config_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    namespace detail
    {
        inline void require(bool condition, const std::string &message)
        {
            if (!condition)
                throw domain_error(message);
        }
    }
}

#endif
