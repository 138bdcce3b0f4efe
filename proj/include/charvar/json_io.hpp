#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "charvar/certifier.hpp"
#include "charvar/fox.hpp"
#include "charvar/pencil.hpp"

namespace charvar {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPolynomial& p);
Json to_json(const LaurentMatrix& mx);
Json to_json(const Presentation& p);
Json to_json(const EpimorphismToZm& nu);
Json to_json(const AbelianData& a);
Json to_json(const TwistedComplex& c);
Json to_json(const BettiProfile& b);
Json to_json(const KernelHomologyReport& r);
Json to_json(const V1Ideal& ideal);
Json to_json(const FullnessVerdict& v);
Json to_json(const Certificate& c);
Json to_json(const ProbeReport& p);
Json to_json(const KernelCrossCheck& k);
Json to_json(const PencilData& p);
Json to_json(const FiniteCoverReport& r);
Json to_json(const Graph& g);
Json to_json(const SimplicialComplex& k);

/// Window table with per-degree growth: `slope` is the last difference
/// divided by the number of translates added per axis step (2 for a box).
Json window_to_json(const std::vector<std::vector<long>>& dims, std::size_t variable_count);

/// Reads a complex back from its JSON form (used for round-trip tests and --complex input).
TwistedComplex complex_from_json(const Json& j);

}  // namespace charvar
