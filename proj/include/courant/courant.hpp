// Copyright 2026 The Courant Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COURANT_COURANT_HPP_
#define COURANT_COURANT_HPP_

#include "courant/eigenfunctions.hpp"
#include "courant/geometry.hpp"
#include "courant/nodal.hpp"
#include "courant/nodal_count.hpp"
#include "courant/report.hpp"
#include "courant/roots.hpp"
#include "courant/screening.hpp"
#include "courant/spectrum.hpp"

#endif  // COURANT_COURANT_HPP_
