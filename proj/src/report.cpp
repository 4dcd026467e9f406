#include "wnear/report.hpp"

namespace wnear {

json complex_json(cplx c) { return json::array({c.real(), c.imag()}); }

json complex_vector_json(const std::vector<cplx>& v) {
  json a = json::array();
  for (const cplx& c : v) a.push_back(complex_json(c));
  return a;
}

json mat2_json(const Mat2& A) { return json::array({json::array({A.xx, A.xk}), json::array({A.kx, A.kk})}); }

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

void to_json(json& j, const CoefficientMatrix& M) {
  j = json::object();
  j["order"] = M.order;
  j["norm_F"] = M.norm_F;
  j["partial_norm_sq"] = M.partial_norm_sq;
  j["quadrature_order"] = M.quadrature_order;
  j["symmetry_defect"] = M.symmetry_defect;
  j["entries"] = complex_vector_json(M.entries);
}

void to_json(json& j, const Spectrum& S) {
  j = json::object();
  j["eigenvalues"] = S.eigenvalues;
  j["n_plus"] = S.n_plus;
  j["n_kernel"] = S.n_kernel;
  j["n_minus"] = S.n_minus;
  j["kernel_tol"] = S.kernel_tol;
  json vecs = json::array();
  for (const auto& v : S.eigenvectors) vecs.push_back(complex_vector_json(v));
  j["eigenvectors"] = std::move(vecs);
}

void to_json(json& j, const ErrorBudget& b) {
  j = json::object();
  j["eigenvalue_bound"] = b.eigenvalue_bound;
  j["gap_m1"] = b.gap_m1;
  j["gap_M1"] = b.gap_M1;
  j["eigenvector_bound"] = optional_number(b.eigenvector_bound);
  j["wigner_bound"] = optional_number(b.wigner_bound);
  j["valid"] = b.valid;
}

void to_json(json& j, const MinimizerResult& r) {
  j = json::object();
  j["lambda_max"] = r.lambda_max;
  j["N"] = r.N;
  j["epsilon"] = r.epsilon;
  j["min_distance"] = r.min_distance;
  j["c0"] = complex_vector_json(r.c0.coeffs);
  j["bounds"] = r.bounds;
  j["degenerate"] = r.degenerate;
  j["is_zero"] = r.is_zero;
  j["norm_F"] = r.norm_F;
  j["quadrature_order"] = r.quadrature_order;
}

void to_json(json& j, const RadialDescriptor& d) {
  j = json::object();
  j["K"] = d.K;
  j["mu_K"] = d.mu_K;
  j["A"] = mat2_json(d.A);
  j["z0"] = json::array({d.z0.x, d.z0.k});
}

void to_json(json& j, const RadialSearch& s) {
  j = json::object();
  j["k_star"] = s.k_star;
  j["mu_star"] = s.mu_star;
  j["certified"] = s.certified;
  j["norm_F"] = s.norm_F;
  j["tail"] = s.tail;
  j["mu"] = s.mu;
}

void to_json(json& j, const SchattenEstimate& e) {
  j = json::object();
  j["q"] = e.q;
  j["value"] = e.value;
  j["error_bound"] = e.error_bound;
  j["hs_norm"] = e.hs_norm;
}

void to_json(json& j, const EigenInterval& e) {
  j = json::object();
  j["eigenvalue"] = e.eigenvalue;
  j["lo"] = e.lo;
  j["hi"] = e.hi;
}

void to_json(json& j, const Representability& r) {
  j = json::object();
  j["representable"] = r.representable;
  j["reason"] = r.reason;
  j["witness_k"] = r.witness_k;
  j["witness_value"] = r.witness_value;
}

void to_json(json& j, const RepresentabilityDiagnostic& d) {
  j = json::object();
  j["N"] = d.N;
  j["min_eigenvalue"] = d.min_eigenvalue;
  j["negative_mass"] = d.negative_mass;
  j["n_negative"] = d.n_negative;
  j["tolerance"] = d.tolerance;
  j["nonrepresentable"] = d.nonrepresentable;
}

void to_json(json& j, const CubicSeries& s) {
  j = json::object();
  j["f00"] = s.f00;
  j["f01"] = s.f01;
  j["f11"] = s.f11;
  j["lambda1"] = s.lambda1;
  j["lambda_minus1"] = s.lambda_minus1;
  j["psi12"] = json::array({s.psi0, s.psi1});
  j["eigenvalue_bound"] = s.eigenvalue_bound;
  j["M1"] = s.M1;
  j["eigenvector_bound"] = s.eigenvector_bound;
  j["wigner_bound"] = s.wigner_bound;
}

void to_json(json& j, const CubicExampleReport& r) {
  j = json::object();
  j["t"] = r.t;
  j["N"] = r.N;
  j["F2"] = json::array({json::array({complex_json(r.F2[0][0]), complex_json(r.F2[0][1])}),
                         json::array({complex_json(r.F2[1][0]), complex_json(r.F2[1][1])})});
  j["lambda1"] = r.lambda1;
  j["lambda_minus1"] = r.lambda_minus1;
  j["lambda1_closed_form"] = r.lambda1_closed;
  j["lambda_minus1_closed_form"] = r.lambda_minus1_closed;
  j["psi12"] = complex_vector_json(r.psi12);
  j["epsilon"] = r.epsilon;
  j["norm_F"] = r.norm_F;
  j["bounds"] = r.bounds;
  j["lambda1_N"] = r.lambda1_N;
  j["lambda_minus1_N"] = r.lambda_minus1_N;
  j["series_predictions"] = r.series;
}

void to_json(json& j, const GramReport& g) {
  j = json::object();
  j["n_max"] = g.n_max;
  j["q"] = g.q;
  j["dimension"] = g.dimension;
  j["max_deviation"] = g.max_deviation;
}

void to_json(json& j, const MonotonicityReport& m) {
  j = json::object();
  j["orders"] = m.orders;
  j["mu_plus"] = m.mu_plus;
  j["mu_minus"] = m.mu_minus;
  j["violations"] = m.violations;
  j["ok"] = m.ok;
}

}  // namespace wnear
