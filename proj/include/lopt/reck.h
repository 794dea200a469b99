// Copyright 2026 The lopt Authors
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

#ifndef LOPT_RECK_H
#define LOPT_RECK_H

#include "lopt/linear_optics.h"

namespace lopt {

/// Triangular decomposition into nearest-neighbour beam splitters and phase
/// shifters. compose(decompose_reck(u)) reproduces u entrywise.
///
/// Column c is cleared from the bottom up: a phase shifter on mode i-1 aligns
/// the phases of rows i-1 and i, then a beam splitter on (i-1, i) zeroes
/// entry (i, c). What remains is a diagonal of phases, emitted as phase
/// shifters applied first. Elements with negligible angle are omitted.
ElementSequence decompose_reck(const ModeUnitary &u);

}  // namespace lopt

#endif
