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

#include "eur/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eur {

namespace {

double scale_of(LogBase base) { return base == LogBase::Bits ? 1.0 / std::log(2.0) : 1.0; }

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string order_label(int n) { return n == kAsymptoticOrder ? "inf" : std::to_string(n); }

// Rounds to 12 significant digits so JSON and CSV agree.
double round12(double x) { return std::stod(fmt12(x)); }

}  // namespace

std::string to_csv(const std::vector<BoundReport>& reports, LogBase base) {
  const double k = scale_of(base);
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const BoundReport& r : reports) {
    out << fmt12(r.generator.param) << ',' << fmt12(r.entropy * k) << ','
        << fmt12(r.ladder.best_value * k) << ',' << order_label(r.ladder.best_n) << ','
        << fmt12(r.l_1 * k) << ',' << fmt12(r.l_mu * k) << ',' << fmt12(r.l_dev * k) << ','
        << fmt12(r.l_maj * k) << ',' << fmt12(r.coherence.ladder * k) << ','
        << fmt12(r.coherence.l_1 * k) << ',' << fmt12(r.coherence.l_dev * k) << ','
        << fmt12(r.coherence.l_maj * k) << '\n';
  }
  return out.str();
}

ReportMetadata metadata_for(const SweepConfig& config) {
  return ReportMetadata{family_name(config.family), config.dim, config.seed,
                        config.n_max,               config.k_star, config.log_base};
}

nlohmann::ordered_json to_json(const BoundReport& r, const ReportMetadata& meta) {
  using json = nlohmann::ordered_json;
  const double k = scale_of(meta.log_base);
  json ladder = json::array();
  for (const LadderEntry& e : r.ladder.entries) {
    ladder.push_back({{"n", e.n},
                      {"s_n", round12(e.s_n)},
                      {"u_n", round12(e.u_n * k)},
                      {"s_term", round12(e.entropy_term * k)},
                      {"l_n", round12(e.l_n * k)}});
  }
  json best_n = r.ladder.best_is_asymptotic() ? json("inf") : json(r.ladder.best_n);
  return json{
      {"param", round12(r.generator.param)},
      {"entropy", round12(r.entropy * k)},
      {"L_best", round12(r.ladder.best_value * k)},
      {"best_n", best_n},
      {"L1", round12(r.l_1 * k)},
      {"LMU", round12(r.l_mu * k)},
      {"LdeV", round12(r.l_dev * k)},
      {"LMaj", round12(r.l_maj * k)},
      {"Coh_L", round12(r.coherence.ladder * k)},
      {"Coh_L1", round12(r.coherence.l_1 * k)},
      {"Coh_LdeV", round12(r.coherence.l_dev * k)},
      {"Coh_LMaj", round12(r.coherence.l_maj * k)},
      {"kstar_effective", r.k_star},
      {"ladder", std::move(ladder)},
      {"asymptotic", {{"n", "inf"}, {"l_n", round12(r.ladder.asymptotic_value * k)}}},
      {"symmetric_path_used", r.ladder.symmetric_path_used},
      {"stopped_early", r.ladder.stopped_early},
      // The mixed-state majorization transform is not applied; LMaj is the pure-state value.
      {"lmaj_pure_state_only", r.entropy > 0.0},
      {"metadata",
       {{"family", meta.family},
        {"dim", meta.dim},
        {"seed", meta.seed},
        {"nmax", meta.n_max},
        {"kstar", meta.k_star},
        {"log_base", meta.log_base == LogBase::Bits ? "bits" : "nats"},
        {"version", kVersion}}},
  };
}

nlohmann::ordered_json to_json(const std::vector<BoundReport>& reports, const ReportMetadata& meta) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const BoundReport& r : reports) out.push_back(to_json(r, meta));
  return out;
}

ComplexMatrix read_unitary_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open unitary file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("unitary file " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("real"))
    throw std::invalid_argument("unitary file must be an object with a \"real\" matrix");

  auto read_part = [&](const nlohmann::ordered_json& rows, const char* name) {
    if (!rows.is_array() || rows.empty())
      throw std::invalid_argument(std::string("unitary file: \"") + name + "\" must be a non-empty array");
    const auto m = static_cast<Index>(rows.size());
    RealMatrix part(m, m);
    for (Index i = 0; i < m; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Index>(row.size()) != m)
        throw std::invalid_argument("unitary file: matrix must be square");
      for (Index j = 0; j < m; ++j) {
        const auto& v = row[static_cast<std::size_t>(j)];
        if (!v.is_number()) throw std::invalid_argument("unitary file: non-numeric entry");
        part(i, j) = v.get<double>();
      }
    }
    return part;
  };

  const RealMatrix re = read_part(doc["real"], "real");
  RealMatrix im = RealMatrix::Zero(re.rows(), re.cols());
  if (doc.contains("imag")) {
    im = read_part(doc["imag"], "imag");
    if (im.rows() != re.rows()) throw std::invalid_argument("unitary file: real/imag size mismatch");
  }
  ComplexMatrix u(re.rows(), re.cols());
  u.real() = re;
  u.imag() = im;
  if (!u.allFinite()) throw std::invalid_argument("unitary file: non-finite entry");
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTol)
    throw std::invalid_argument("unitary file: matrix is not unitary (|U^dag U - I|_max = " +
                                std::to_string(defect) + ")");
  return u;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace eur
