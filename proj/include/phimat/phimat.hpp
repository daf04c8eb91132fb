// Copyright 2026 The phimat Authors
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

// Umbrella header: the whole library without the command-line front end.

#ifndef PHIMAT_PHIMAT_HPP_
#define PHIMAT_PHIMAT_HPP_

#include "phimat/axioms.hpp"
#include "phimat/catalog.hpp"
#include "phimat/checks.hpp"
#include "phimat/core_sets.hpp"
#include "phimat/correspondence.hpp"
#include "phimat/instance_io.hpp"
#include "phimat/matroid.hpp"
#include "phimat/propositions.hpp"
#include "phimat/whitehead.hpp"

#endif  // PHIMAT_PHIMAT_HPP_
