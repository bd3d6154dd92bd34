#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <typent/typent.hpp>

#include "cli.hpp"

namespace typent::cli {

namespace {

using Named = std::pair<std::string, StateSpace>;

std::vector<Named> spaces_for_identities() {
  return {{"quantum-2", build_quantum(2)},       {"quantum-4", build_quantum(4)},
          {"quantum-8", build_quantum(8)},       {"classical-3", build_classical(3)},
          {"classical-16", build_classical(16)}, {"polygon-4", build_polygon(4)},
          {"polygon-5", build_polygon(5)},       {"polygon-6", build_polygon(6)},
          {"boxworld-local", build_boxworld_local()}};
}

std::vector<Transformation> group_sample(const StateSpace& space, int count, Rng& rng) {
  if (space.group().elements) {
    return *space.group().elements;
  }
  std::vector<Transformation> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(space.group().draw(rng));
  }
  return out;
}

Matrix random_metric(int k, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix a(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      a(i, j) = normal(rng);
    }
  }
  return a.transpose() * a + Matrix::Identity(k, k);
}

// Diagonal qubit unitaries: invariant under rotations about one axis only.
GroupSampler z_rotations(const StateSpace& qubit) {
  auto basis = qubit.shared_basis();
  GroupSampler s;
  s.draw = [basis](Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    CMatrix u = CMatrix::Zero(2, 2);
    u(0, 0) = 1.0;
    u(1, 1) = std::polar(1.0, angle(rng));
    return Transformation(u, basis);
  };
  return s;
}

}  // namespace

Json verify_pauli_identities(const VerifyOptions& options) {
  Json spaces = Json::array();
  bool pass = true;
  const double tol = 1e-10;
  std::uint64_t case_index = 0;
  for (const auto& [name, space] : spaces_for_identities()) {
    const Gram gram = analytic_gram(space);
    const PauliSet set = complete_pauli_set(space, gram);
    Rng rng = make_stream(options.seed, case_index++);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double complete_dev = 0.0;
    double collision_dev = 0.0;
    double collision_excess = 0.0;
    for (int i = 0; i < options.states; ++i) {
      const Vector w = fixed_purity_state(space, gram, unit(rng), rng);
      const double p = purity(gram, w);
      complete_dev = std::max(complete_dev, std::abs(p - purity_via_pauli_set(set, gram, w)));
      const CollisionProbability best = max_collision_probability(gram, w);
      collision_dev = std::max(collision_dev, std::abs(best.value - 0.5 * (1.0 + p)));
      if (best.optimizer) {
        collision_dev = std::max(collision_dev, std::abs(best.value - collision_probability(*best.optimizer, w)));
      }
      for (const auto& map : set.maps) {
        collision_excess = std::max(collision_excess, collision_probability(map, w) - best.value);
      }
    }
    const Vector pure = space.sample_pure(rng);
    const Estimate avg = pauli_haar_average(space.group(), set.maps.front(), pure, options.samples, options.seed);
    const double expected_avg = purity(gram, pure) / (space.dim() - 1);
    const double avg_tol = avg.exact ? tol : 3.0 * avg.std_error + 1e-12;
    const bool ok = complete_dev <= tol && collision_dev <= tol && collision_excess <= tol &&
                    std::abs(avg.value - expected_avg) <= avg_tol;
    pass = pass && ok;
    spaces.push_back({{"space", name},
                      {"pauli_maps", set.size()},
                      {"provenance", to_string(set.provenance)},
                      {"complete_set_max_deviation", complete_dev},
                      {"collision_max_deviation", collision_dev},
                      {"collision_max_excess", collision_excess},
                      {"group_average", avg.value},
                      {"group_average_stderr", avg.std_error},
                      {"group_average_expected", expected_avg},
                      {"group_average_exact", avg.exact},
                      {"pass", ok}});
  }
  Json r;
  r["pass"] = pass;
  r["states_per_space"] = options.states;
  r["spaces"] = spaces;
  return r;
}

Json verify_gram_invariance(const VerifyOptions& options) {
  const std::vector<Named> cases = {{"quantum-2", build_quantum(2)},       {"quantum-3", build_quantum(3)},
                                    {"real-quantum-3", build_real_quantum(3)}, {"classical-4", build_classical(4)},
                                    {"polygon-5", build_polygon(5)},       {"polygon-6", build_polygon(6)},
                                    {"boxworld-local", build_boxworld_local()}};
  Json spaces = Json::array();
  bool pass = true;
  std::uint64_t case_index = 0;
  for (const auto& [name, space] : cases) {
    const Gram gram = analytic_gram(space);
    Rng rng = make_stream(options.seed, case_index++);
    double invariance = 0.0;
    for (const auto& t : group_sample(space, 64, rng)) {
      const Matrix m = t.matrix();
      invariance = std::max(invariance, (m.transpose() * gram.matrix() * m - gram.matrix()).cwiseAbs().maxCoeff());
    }
    double pure_dev = 0.0;
    for (int i = 0; i < 32; ++i) {
      pure_dev = std::max(pure_dev, std::abs(purity(gram, space.sample_pure(rng)) - 1.0));
    }
    const double center = (gram.matrix() * space.max_mixed()).cwiseAbs().maxCoeff();
    const IrreducibilityReport irr = check_irreducible(space, 5, 2000, options.seed);

    GramOptions go;
    go.n_avg = options.samples;
    go.seed = options.seed;
    go.reference = random_metric(space.dim(), rng);
    const Gram averaged = invariant_gram(space, go);
    const double mc_dev = (averaged.matrix() - gram.matrix()).cwiseAbs().maxCoeff();
    const bool exact = space.group().enumerable();
    const double mc_tol = exact ? 1e-9 : 5.0 / std::sqrt(static_cast<double>(options.samples));

    const bool ok = invariance <= 1e-9 && pure_dev <= 1e-9 && center <= 1e-9 && irr.irreducible() && mc_dev <= mc_tol;
    pass = pass && ok;
    spaces.push_back({{"space", name},
                      {"invariance_max_deviation", invariance},
                      {"pure_purity_max_deviation", pure_dev},
                      {"max_mixed_in_kernel", center},
                      {"irreducibility_deviation", irr.max_deviation},
                      {"irreducibility_threshold", irr.threshold},
                      {"averaged_gram_max_deviation", mc_dev},
                      {"averaged_gram_tolerance", mc_tol},
                      {"averaged_gram_exact", exact},
                      {"pass", ok}});
  }

  const StateSpace qubit = build_quantum(2);
  const GroupSampler axial = z_rotations(qubit);
  const IrreducibilityReport red = check_irreducible(axial, qubit.order_unit(), 5, 2000, options.seed);
  bool rejected = false;
  try {
    (void)invariant_gram(qubit, axial, GramOptions{options.samples, options.seed, std::nullopt, 2000});
  } catch (const Error& e) {
    rejected = e.code() == Errc::reducible_space;
  }
  const bool red_ok = !red.irreducible() && rejected;
  pass = pass && red_ok;

  Json r;
  r["pass"] = pass;
  r["spaces"] = spaces;
  r["reducible_control"] = {{"group", "qubit-axial-rotations"},
                            {"irreducibility_deviation", red.max_deviation},
                            {"irreducibility_threshold", red.threshold},
                            {"rejected", rejected},
                            {"pass", red_ok}};
  return r;
}

Json verify_classical_subsystem(const VerifyOptions& options) {
  (void)options;
  struct Case {
    std::string name;
    StateSpace space;
    bool centered;
  };
  const std::vector<Case> cases = {{"quantum-2", build_quantum(2), true},     {"quantum-3", build_quantum(3), true},
                                   {"classical-2", build_classical(2), true}, {"classical-4", build_classical(4), true},
                                   {"classical-8", build_classical(8), true}, {"polygon-4", build_polygon(4), true},
                                   {"polygon-5", build_polygon(5), false},    {"polygon-6", build_polygon(6), true},
                                   {"boxworld-local", build_boxworld_local(), true}};
  Json spaces = Json::array();
  bool pass = true;
  for (const auto& c : cases) {
    const Gram gram = analytic_gram(c.space);
    const ClassicalSubsystemWitness w = capacity_witness(c.space);
    const CenteredReport rep = verify_centered_dynamical(c.space, gram, w);
    const bool ok = c.centered ? rep.pass : !rep.centered;
    pass = pass && ok;
    spaces.push_back({{"space", c.name},
                      {"capacity", c.space.capacity()},
                      {"centered", rep.centered},
                      {"center_deviation", rep.center_deviation},
                      {"witness_deviation", rep.witness_deviation},
                      {"expected_off_diagonal", rep.expected_off_diagonal},
                      {"gram_max_deviation", rep.max_gram_deviation},
                      {"off_diagonal", rep.off_diagonal},
                      {"pass", ok}});
  }

  Json composites = Json::array();
  const std::vector<std::pair<std::string, Composite>> comps = {
      {"quantum-2x3", compose(build_quantum(2), build_quantum(3))},
      {"quantum-2x2", compose(build_quantum(2), build_quantum(2))},
      {"classical-2x3", compose(build_classical(2), build_classical(3))}};
  for (const auto& [name, comp] : comps) {
    bool ok = true;
    Json entry = {{"composite", name}};
    try {
      const PhiMuPurity pm = purity_pure_times_maxmixed(comp, analytic_gram(comp.joint()));
      entry["numeric"] = pm.numeric;
      entry["closed_form"] = pm.closed_form;
    } catch (const Error& e) {
      ok = false;
      entry["error"] = e.what();
    }
    entry["pass"] = ok;
    pass = pass && ok;
    composites.push_back(entry);
  }

  Json r;
  r["pass"] = pass;
  r["spaces"] = spaces;
  r["pure_times_max_mixed"] = composites;
  return r;
}

Json verify_boxworld(const VerifyOptions& options) {
  const StateSpace box = build_boxworld_bipartite();
  const ObstructionRecord ob = boxworld_normalization_obstruction();

  int extreme = 0;
  for (const auto& v : box.vertices()) {
    extreme += is_extreme(box, v) ? 1 : 0;
  }
  const bool pr_extreme = is_extreme(box, pr_box());
  const double pr_purity = boxworld_purity(box, pr_box());
  const double product_purity = boxworld_purity(box, boxworld_product(1, 1, 1, 1));
  const bool mu_not_extreme = !is_extreme(box, box.max_mixed());

  bool cone_rejected = false;
  try {
    Vector outside = pr_box();
    outside += 0.5 * (pr_box() - box.max_mixed());
    (void)boxworld_purity(box, outside);
  } catch (const Error& e) {
    cone_rejected = e.code() == Errc::cone_error;
  }

  Rng rng = make_stream(options.seed, 0);
  std::vector<Vector> probes = box.vertices();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 32; ++i) {
    Vector w = Vector::Zero(box.dim());
    double total = 0.0;
    for (const auto& v : box.vertices()) {
      const double t = unit(rng);
      w += t * v;
      total += t;
    }
    probes.push_back(w / total);
  }
  double invariance = 0.0;
  for (const auto& t : *box.group().elements) {
    for (const auto& w : probes) {
      invariance = std::max(invariance, std::abs(boxworld_form(t.apply(w)) - boxworld_form(w)));
    }
  }

  const bool pass = invariance <= 1e-12 && std::abs(pr_purity - 1.0 / 3.0) <= 1e-12 &&
                    std::abs(ob.a - 3.0) <= 1e-9 && std::abs(ob.b) <= 1e-9 && box.vertices().size() == 24 && extreme == 24 && pr_extreme && mu_not_extreme &&
                    ob.positivity_violated && cone_rejected;
  Json r;
  r["pass"] = pass;
  r["group_elements"] = box.group().elements->size();
  r["invariance_max_deviation"] = invariance;
  r["vertices"] = box.vertices().size();
  r["extreme_vertices"] = extreme;
  r["pr_box_extreme"] = pr_extreme;
  r["max_mixed_extreme"] = !mu_not_extreme;
  r["pr_box_purity"] = pr_purity;
  r["product_purity"] = product_purity;
  r["outside_state_rejected"] = cone_rejected;
  r["normalization"] = {{"product_a", ob.product_a},
                        {"product_b", ob.product_b},
                        {"pr_a", ob.pr_a},
                        {"pr_b", ob.pr_b},
                        {"a", ob.a},
                        {"b", ob.b},
                        {"positivity_violated", ob.positivity_violated},
                        {"degenerate_purity", ob.degenerate_purity},
                        {"degenerate_state_distance", ob.degenerate_state_distance}};
  return r;
}

}  // namespace typent::cli
