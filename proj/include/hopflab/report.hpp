#pragma once

// JSON and CSV serialization of check results. Keys are sorted and floats
// are rounded to 15 significant digits, so equal inputs give equal bytes.

#include <json.hpp>
#include <string>
#include <vector>

#include "hopflab/hopf.hpp"
#include "hopflab/igl_rep.hpp"
#include "hopflab/podles_rep.hpp"

namespace hopflab {

using json = nlohmann::json;

double round15(double x);
std::string format15(double x);

json to_json(const AxiomReport& r, std::size_t max_witnesses = 10);
json to_json(const std::vector<CriticalPair>& pairs, const Presentation& pres);
json to_json(const std::vector<StarDefect>& defects, const Presentation& pres);
json to_json(const PairingCompatReport& r);
json to_json(const ResidualReport& r);
json to_json(const ConvergenceStudy& s);
json to_json(const QuadraticSurd& x);

/// One header line, then one line per row, values printed with %.15g.
std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

std::string dump(const json& j);

}  // namespace hopflab
