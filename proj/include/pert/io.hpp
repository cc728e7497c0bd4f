#pragma once

#include "pert/graphs.hpp"
#include "pert/poset.hpp"
#include "pert/realise.hpp"
#include "pert/tropical.hpp"
#include "pert/whatif.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace pert::io {

// Insertion-ordered so documents keep the field order of the published schemas.
using json = nlohmann::ordered_json;

/// {"activities":[{"id":1,"name":"dig","cost":"3/2"},...],"arcs":[[1,3],...]}
/// Ids must be exactly 1..n (any order); names are optional; costs are
/// decimal or "p/q" strings, or JSON integers.
ProjectNetwork network_from_json(const json& j, ValidateOptions options = {});
json network_to_json(const ProjectNetwork& network);

/// {"n":6,"terms":[[1,3,6],...]}
TropicalPolynomial poly_from_json(const json& j);
json poly_to_json(const TropicalPolynomial& f);

/// Accepts polynomial JSON, network JSON (converted through its EFT
/// polynomial) or the "{1,2}+{2,3}" text form.
TropicalPolynomial read_polynomial(std::string_view text, std::size_t max_chains = kDefaultMaxChains);

/// {"vertices":[[1,3,6],...],"edges":[[0,1],...]}
json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const json& j, int n);

json terms_to_json(const SupportFamily& family);
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// Parses "5,3,3/2" or a JSON array of rational strings.
CostVector parse_costs(std::string_view text);

json evaluation_to_json(const Rational& value, const SupportFamily& argmax);
json membership_to_json(const ChamberMembership& m);
json whatif_to_json(const WhatIfResult& r, const Prediction& p);
json realisation_failure_to_json(NotRealisableReason reason);

/// Hasse diagram; node labels carry names and costs.
std::string network_to_dot(const ProjectNetwork& network);
std::string graph_to_dot(const LabeledGraph& g, const std::string& name);

} // namespace pert::io
