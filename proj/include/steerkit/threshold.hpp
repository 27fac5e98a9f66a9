#pragma once

#include <cstdint>
#include <vector>

#include "steerkit/measurement.hpp"
#include "steerkit/operators.hpp"

namespace steerkit {

/// One outcome per setting; the extreme points of the response polytope.
/// Assignments are 0-based here, 1-based in reports.
struct DeterministicResponse {
    std::vector<int> assignments;
};

/// Nonsteering threshold together with the response and mixture attaining it.
struct ThresholdReport {
    double f_nst;
    double g_nst;
    DeterministicResponse maximizer;
    DensityOperator rho_bar;
};

inline constexpr int kQubitSettingBudget = 24;
inline constexpr std::int64_t kResponseBudget = 10'000'000;

/// Exact threshold for qubit axis assemblies: the sign enumeration
/// max over s of |sum_mu q_mu s_mu n_mu|, f = (1 + g)/2.
ThresholdReport qubit_nst(const MeasurementAssembly& assembly);

/// Exact threshold for any finite assembly: max over the d^N deterministic
/// responses of the top eigenvalue of sum_mu q_mu P^{a(mu)}_mu.
ThresholdReport general_nst(const MeasurementAssembly& assembly);

/// Two equally weighted bases related by u: (1 + max_ab |u_ab|)/2.
double two_setting_nst_from_unitary(const ComplexMatrix& u);

/// Geometric threshold of the equally spaced planar family.
double planar_nst(int n_settings);

/// Same quantity as (1/N) max over alpha of sum_k |cos(k pi/N - alpha)|,
/// evaluated without touching the sign enumeration.
double planar_nst_closed_form(int n_settings);

/// Max of the top eigenvalue over `samples` random stochastic response
/// tables (uniform on the product of outcome simplices). Seeded and
/// reproducible. With include_deterministic, the d^N extreme points are
/// swept as well, which recovers the exact threshold.
double probabilistic_oracle(const MeasurementAssembly& assembly, std::int64_t samples,
                            std::uint64_t seed, bool include_deterministic = false);

/// (d f - 1)/(d - 1); requires f in [1/d, 1].
double geometric_from_fidelity(double f, int d);

/// rho_bar of one response: sum_mu q_mu P^{a(mu)}_mu, accumulated in
/// setting order (shared by every threshold path so ties break identically).
ComplexMatrix response_mixture(const MeasurementAssembly& assembly, const DeterministicResponse& r);

}  // namespace steerkit
