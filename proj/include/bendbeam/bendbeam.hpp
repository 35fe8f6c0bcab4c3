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

#ifndef BENDBEAM_BENDBEAM_HPP
#define BENDBEAM_BENDBEAM_HPP

#include "array.hpp"
#include "carrier.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "pls.hpp"
#include "propagation.hpp"
#include "rng.hpp"
#include "trajectory.hpp"

#define BENDBEAM_VERSION "0.1.0"

#endif
