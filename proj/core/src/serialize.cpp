#include "typent/serialize.hpp"

#include "typent/error.hpp"

namespace typent {

namespace {

Json vector_json(const Vector& v) {
  Json arr = Json::array();
  for (double x : v) {
    arr.push_back(x);
  }
  return arr;
}

}  // namespace

Json descriptor_json(const StateSpace& space) {
  Json j;
  j["kind"] = std::string(to_string(space.kind()));
  j["K"] = space.dim();
  j["N"] = space.capacity();
  j["order_unit"] = vector_json(space.order_unit());
  j["max_mixed"] = vector_json(space.max_mixed());
  j["labels"] = space.labels();
  return j;
}

Json report_json(const McReport& r) {
  Json j;
  if (r.formula_id) {
    j["formula_id"] = *r.formula_id;
  }
  j["mean"] = r.mean;
  j["stderr"] = r.std_error;
  j["n_samples"] = r.n_samples;
  j["seed"] = r.seed;
  j["realized_global_purity"] = r.realized_global_purity;
  j["global_purity_spread"] = r.global_purity_spread;
  if (r.prediction) {
    j["prediction"] = *r.prediction;
  }
  if (r.histogram) {
    Json h;
    h["lo"] = r.histogram->lo;
    h["hi"] = r.histogram->hi;
    h["counts"] = r.histogram->counts;
    j["histogram"] = h;
  }
  return j;
}

McReport report_from_json(const Json& j) {
  McReport r;
  if (j.contains("formula_id")) {
    r.formula_id = j.at("formula_id").get<std::string>();
  }
  r.mean = j.at("mean").get<double>();
  r.std_error = j.at("stderr").get<double>();
  r.n_samples = j.at("n_samples").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.realized_global_purity = j.at("realized_global_purity").get<double>();
  r.global_purity_spread = j.value("global_purity_spread", 0.0);
  if (j.contains("prediction")) {
    r.prediction = j.at("prediction").get<double>();
  }
  if (j.contains("histogram")) {
    const auto& h = j.at("histogram");
    Histogram hist;
    hist.lo = h.at("lo").get<double>();
    hist.hi = h.at("hi").get<double>();
    hist.counts = h.at("counts").get<std::vector<std::uint64_t>>();
    r.histogram = std::move(hist);
  }
  return r;
}

Json prediction_json(const Prediction& p) {
  Json j;
  j["formula_id"] = p.formula_id;
  j["value"] = p.value;
  Json inputs = Json::object();
  for (const auto& [k, v] : p.inputs) {
    inputs[k] = v;
  }
  j["inputs"] = inputs;
  return j;
}

Prediction prediction_from_json(const Json& j) {
  Prediction p;
  p.formula_id = j.at("formula_id").get<std::string>();
  p.value = j.at("value").get<double>();
  for (const auto& [k, v] : j.at("inputs").items()) {
    p.inputs.emplace_back(k, v.get<double>());
  }
  return p;
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << Json(h.bin_lo(i)).dump() << ',' << Json(h.bin_hi(i)).dump() << ',' << h.counts[i] << '\n';
  }
}

}  // namespace typent
