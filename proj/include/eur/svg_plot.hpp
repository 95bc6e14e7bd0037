// Copyright 2026 The eur-ladder Authors
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

#include <string>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/sweep.hpp"

namespace eur {

struct PlotOptions {
  std::string title;
  std::string x_label = "parameter";
  std::vector<std::string> bounds{"ladder", "mu", "l1", "dev", "maj"};
  LogBase log_base = LogBase::Nats;
  int width = 720;
  int height = 480;
};

/// Static SVG line plot of bound value against the swept parameter, one curve per requested
/// bound. Raw bounds are drawn for pure states and coherence-sum values otherwise.
std::string render_svg(const std::vector<BoundReport>& reports, const PlotOptions& options);

}  // namespace eur
