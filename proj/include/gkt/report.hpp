#pragma once

#include "gkt/conditions.hpp"
#include "gkt/ktheory.hpp"
#include "gkt/synthesis.hpp"
#include "json.hpp"

namespace gkt {

using Json = nlohmann::ordered_json;

/// Integers that fit in a signed 64-bit word become JSON numbers, others strings.
Json integer_json(const Integer& x);
Json vector_json(const IntVector& v);
Json columns_json(const IntMatrix& m);

Json conditions_json(const ConditionReport& r);
Json ktheory_json(const FiniteGraph& f, const KTheoryResult& k);
Json chain_ktheory_json(const ChainKTheory& k);
Json les_json(const LesReport& r);
Json synthesis_json(const SynthesisResult& r);

}  // namespace gkt
