#pragma once

#include <nlohmann/json.hpp>

#include "hetperc/bounds.hpp"
#include "hetperc/fit.hpp"
#include "hetperc/verification.hpp"

namespace hetperc::cli {

using Json = nlohmann::ordered_json;

Json perron_json(const PerronResult& pr);
Json bound_report_json(const BoundReport& report);
Json fit_result_json(const FitResult& fit);
Json soundness_json(const SoundnessSummary& summary);

}  // namespace hetperc::cli
