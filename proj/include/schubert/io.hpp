#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/birational.hpp"
#include "schubert/verify.hpp"

namespace schubert {

using Json = nlohmann::ordered_json;

// Inverse of MultiPoly::to_string and RatFunc::to_string. Throws ParseError.
MultiPoly parse_poly(const std::string &text);
RatFunc parse_ratfunc(const std::string &text);

// {perm, vars: [{id, u, RL, R1, R2}], algorithm, eps}; rational functions are strings.
Json map_to_json(const BirationalMap &map);
BirationalMap map_from_json(const Json &j);
bool same_map(const BirationalMap &x, const BirationalMap &y);

Json matrix_to_json(const RFMatrix &m);

// wu, its UDL factors and the variables read off each superdiagonal entry.
struct Decomposition {
    RFMatrix wu;
    Udl<RatFunc> udl;
    std::vector<std::vector<VarId>> blocks;  // blocks[i] from x_{i,i+1}, i = 1..r−1
};
Decomposition decompose(const PatternMatrix &m, const BirationalMap &map);
Json decomposition_to_json(const Decomposition &d);

Json result_to_json(const CheckResult &c);
Json results_to_json(const std::vector<CheckResult> &results);
Json report_to_json(const SweepReport &rep);
std::string report_text(const SweepReport &rep);

std::string latex(const RatFunc &f);
// \left(\begin{smallmatrix} ... \end{smallmatrix}\right)
std::string latex_matrix(const RFMatrix &m);

} // namespace schubert
