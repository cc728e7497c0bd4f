#include "pert/session.hpp"

#include "pert/error.hpp"
#include "pert/realise.hpp"
#include "pert/whatif.hpp"

namespace pert {

Model::Model(ProjectNetwork network, SessionLimits limits)
    : network_(std::move(network)), poly_(eft_polynomial(network_, limits.max_chains)), limits_(limits) {}

const LabeledGraph& Model::adjacency() const {
    answers::check_term_budget(poly_, limits_.max_terms);
    std::call_once(adjacency_once_, [&] { adjacency_ = adjacency_graph(poly_); });
    return *adjacency_;
}

const LabeledGraph& Model::newton() const {
    answers::check_term_budget(poly_, limits_.max_terms);
    std::call_once(newton_once_, [&] { newton_ = newton_skeleton(poly_); });
    return *newton_;
}

std::shared_ptr<const Snapshot> Session::snapshot() const {
    std::lock_guard lock(mutex_);
    return current_;
}

void Session::load(ProjectNetwork network) {
    CostVector costs = network.costs();
    auto model = std::make_shared<const Model>(std::move(network), limits_);
    auto next = std::make_shared<const Snapshot>(Snapshot{std::move(model), std::move(costs)});
    std::lock_guard lock(mutex_);
    current_ = std::move(next);
}

void Session::set_costs(CostVector costs) {
    std::lock_guard lock(mutex_);
    if (!current_) throw Error(ErrorKind::Domain, "NoNetwork", "no network loaded");
    const auto n = static_cast<std::size_t>(current_->network().size());
    if (costs.size() != n)
        throw Error(ErrorKind::Dimension, "DimensionMismatch",
                    "expected " + std::to_string(n) + " costs, got " + std::to_string(costs.size()));
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(costs[i]) < 0)
            throw Error(ErrorKind::Input, "NegativeCost", "cost " + std::to_string(i + 1) + " is negative");
    current_ = std::make_shared<const Snapshot>(Snapshot{current_->model, std::move(costs)});
}

namespace answers {

io::json eft(const TropicalPolynomial& f, std::span<const Rational> costs) {
    Evaluation e = eval(f, costs);
    io::json out = io::poly_to_json(f);
    out["text"] = to_text(f);
    out["value"] = io::rational_to_json(e.value);
    out["critical_paths"] = io::terms_to_json(e.argmax);
    return out;
}

io::json graph(const LabeledGraph& g) { return io::graph_to_json(g); }

io::json chamber(const TropicalPolynomial& f, std::span<const Rational> costs) {
    return io::membership_to_json(chamber_membership(f, costs));
}

io::json whatif(const TropicalPolynomial& f, const LabeledGraph& adjacency, std::span<const Rational> costs,
                int activity, int sign) {
    WhatIfResult trace = ray_trace(f, costs, activity, sign);
    Prediction p = predict_transitions(f, adjacency, trace.start.front(), activity, sign);
    return io::whatif_to_json(trace, p);
}

void check_term_budget(const TropicalPolynomial& f, std::size_t max_terms) {
    if (f.size() > max_terms)
        throw Error(ErrorKind::Limit, "TermBudgetExceeded",
                    "polynomial has " + std::to_string(f.size()) + " terms; the graph budget is " +
                        std::to_string(max_terms));
}

int parse_direction(const std::string& direction) {
    if (direction == "up") return 1;
    if (direction == "down") return -1;
    throw Error(ErrorKind::Input, "BadParameters", "direction must be \"up\" or \"down\"");
}

} // namespace answers

} // namespace pert
