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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "eur/bounds.hpp"
#include "eur/sweep.hpp"

namespace eur {

inline constexpr const char* kVersion = "1.0.0";

/// Header of the sweep CSV.
inline constexpr const char* kCsvHeader =
    "param,entropy,L_best,best_n,L1,LMU,LdeV,LMaj,Coh_L,Coh_L1,Coh_LdeV,Coh_LMaj";

/// Sweep CSV with 12 significant digits; best_n is "inf" for the asymptotic entry.
std::string to_csv(const std::vector<BoundReport>& reports, LogBase base = LogBase::Nats);

struct ReportMetadata {
  std::string family;
  Index dim = 0;
  std::uint64_t seed = 0;
  int n_max = 64;
  int k_star = 2;
  LogBase log_base = LogBase::Nats;
};

ReportMetadata metadata_for(const SweepConfig& config);

nlohmann::ordered_json to_json(const BoundReport& report, const ReportMetadata& meta);

/// Array with one object per grid point.
nlohmann::ordered_json to_json(const std::vector<BoundReport>& reports, const ReportMetadata& meta);

/// Reads {"real": [[...]], "imag": [[...]]} ("imag" optional) and checks that the matrix is
/// square, finite and unitary to 1e-10.
ComplexMatrix read_unitary_file(const std::filesystem::path& path);

/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace eur
