#pragma once

// JSON forms of the result types. Complex numbers are [re, im] pairs and
// matrices are row-major.

#include "json.hpp"
#include "wnear/coefficients.hpp"
#include "wnear/dispersive.hpp"
#include "wnear/gram.hpp"
#include "wnear/optimizer.hpp"
#include "wnear/radial.hpp"
#include "wnear/schatten.hpp"
#include "wnear/spectral.hpp"

namespace wnear {

using json = nlohmann::ordered_json;

json complex_json(cplx c);
json complex_vector_json(const std::vector<cplx>& v);
json mat2_json(const Mat2& A);

void to_json(json& j, const CoefficientMatrix& M);
void to_json(json& j, const Spectrum& S);
void to_json(json& j, const ErrorBudget& b);
void to_json(json& j, const MinimizerResult& r);
void to_json(json& j, const RadialDescriptor& d);
void to_json(json& j, const RadialSearch& s);
void to_json(json& j, const SchattenEstimate& e);
void to_json(json& j, const EigenInterval& e);
void to_json(json& j, const Representability& r);
void to_json(json& j, const RepresentabilityDiagnostic& d);
void to_json(json& j, const CubicSeries& s);
void to_json(json& j, const CubicExampleReport& r);
void to_json(json& j, const GramReport& g);
void to_json(json& j, const MonotonicityReport& m);

}  // namespace wnear
