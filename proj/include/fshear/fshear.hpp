// Copyright 2026 The fshear Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "fshear/array.hpp"
#include "fshear/errors.hpp"
#include "fshear/framecheck.hpp"
#include "fshear/grid.hpp"
#include "fshear/imagegen.hpp"
#include "fshear/io.hpp"
#include "fshear/spectra.hpp"
#include "fshear/transform.hpp"
#include "fshear/windows.hpp"
