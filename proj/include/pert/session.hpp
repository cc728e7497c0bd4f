#pragma once

#include "pert/graphs.hpp"
#include "pert/io.hpp"
#include "pert/poset.hpp"
#include "pert/tropical.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace pert {

struct SessionLimits {
    std::size_t max_chains = kDefaultMaxChains;
    /// G(F)/N(F) need O(terms^2) feasibility calls; beyond this many terms the
    /// request fails with TermBudgetExceeded instead of running.
    std::size_t max_terms = 64;
};

/// Everything derived from one network. G(F) and N(F) are computed on
/// first use and shared by every snapshot of the same network.
class Model {
public:
    Model(ProjectNetwork network, SessionLimits limits);

    const ProjectNetwork& network() const noexcept { return network_; }
    const TropicalPolynomial& polynomial() const noexcept { return poly_; }

    /// Throws TermBudgetExceeded past limits.max_terms.
    const LabeledGraph& adjacency() const;
    const LabeledGraph& newton() const;

private:
    ProjectNetwork network_;
    TropicalPolynomial poly_;
    SessionLimits limits_;
    mutable std::once_flag adjacency_once_;
    mutable std::once_flag newton_once_;
    mutable std::optional<LabeledGraph> adjacency_;
    mutable std::optional<LabeledGraph> newton_;
};

/// A network model plus the current cost vector; immutable once published.
struct Snapshot {
    std::shared_ptr<const Model> model;
    CostVector costs;

    const ProjectNetwork& network() const noexcept { return model->network(); }
    const TropicalPolynomial& polynomial() const noexcept { return model->polynomial(); }
};

/// Single-network session. Readers take a snapshot pointer; writers build a
/// new snapshot and swap it in under the lock, so no reader sees a mix.
class Session {
public:
    explicit Session(SessionLimits limits = {}) : limits_(limits) {}

    /// nullptr until a network is loaded.
    std::shared_ptr<const Snapshot> snapshot() const;

    void load(ProjectNetwork network);
    /// Throws DimensionMismatch (no network: NoNetwork).
    void set_costs(CostVector costs);

    const SessionLimits& limits() const noexcept { return limits_; }

private:
    SessionLimits limits_;
    mutable std::mutex mutex_;
    std::shared_ptr<const Snapshot> current_;
};

// Answer builders shared by the CLI and the HTTP service.
namespace answers {

io::json eft(const TropicalPolynomial& f, std::span<const Rational> costs);
io::json graph(const LabeledGraph& g);
io::json chamber(const TropicalPolynomial& f, std::span<const Rational> costs);
io::json whatif(const TropicalPolynomial& f, const LabeledGraph& adjacency, std::span<const Rational> costs,
                int activity, int sign);

/// Throws TermBudgetExceeded when f has more than max_terms terms.
void check_term_budget(const TropicalPolynomial& f, std::size_t max_terms);

/// "up" -> +1, "down" -> -1, otherwise BadParameters.
int parse_direction(const std::string& direction);

} // namespace answers

} // namespace pert
