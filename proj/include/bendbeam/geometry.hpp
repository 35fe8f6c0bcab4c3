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

#ifndef BENDBEAM_GEOMETRY_HPP
#define BENDBEAM_GEOMETRY_HPP

namespace bendbeam
{
    // Point in the xz propagation plane; the array lies on z = 0.
    struct Point
    {
        double x = 0.0;
        double z = 0.0;

        friend bool operator==(const Point &, const Point &) = default;
    };

    // Receiver location, z > 0.
    using RxLocation = Point;
}

#endif
