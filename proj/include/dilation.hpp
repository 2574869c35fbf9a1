// Copyright 2026 The dilation-augment Authors
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

#include "dilation/analysis.hpp"
#include "dilation/augment.hpp"
#include "dilation/error.hpp"
#include "dilation/generator.hpp"
#include "dilation/graph.hpp"
#include "dilation/instance.hpp"
#include "dilation/metric.hpp"
#include "dilation/parallel.hpp"
#include "dilation/shortcuts.hpp"
#include "dilation/shortest_paths.hpp"
#include "dilation/signatures.hpp"
