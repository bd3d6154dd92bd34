#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

#include "typent/montecarlo.hpp"
#include "typent/randomize.hpp"
#include "typent/statespace.hpp"

namespace typent {

using Json = nlohmann::ordered_json;

// {kind, K, N, order_unit, max_mixed, labels}
Json descriptor_json(const StateSpace& space);

// {formula_id?, mean, stderr, n_samples, seed, realized_global_purity,
//  global_purity_spread, prediction?, histogram?}
Json report_json(const McReport& report);
McReport report_from_json(const Json& j);

// {formula_id, value, inputs}
Json prediction_json(const Prediction& p);
Prediction prediction_from_json(const Json& j);

// bin_lo,bin_hi,count
void write_histogram_csv(std::ostream& out, const Histogram& h);

}  // namespace typent
