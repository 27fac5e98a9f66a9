#include "steerkit/threshold.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "steerkit/errors.hpp"
#include "steerkit/parallel.hpp"

namespace steerkit {

namespace {

// Top eigenvalue only; closed form for qubits, vectorless Jacobi otherwise.
double lambda_max_fast(ComplexMatrix a) {
    const int n = a.dim();
    if (n == 2) {
        const double p = a(0, 0).real(), q = a(1, 1).real();
        return 0.5 * (p + q) + std::sqrt(0.25 * (p - q) * (p - q) + std::norm(a(0, 1)));
    }
    const double tol = 1e-12 * std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        if (std::sqrt(off) <= tol) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq == 0.0) continue;
                const Complex phase = apq / abs_apq;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * abs_apq);
                const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int r = 0; r < n; ++r) {
                    const Complex x = a(r, p), y = a(r, q);
                    a(r, p) = c * x + s * std::conj(phase) * y;
                    a(r, q) = -s * phase * x + c * y;
                }
                for (int col = 0; col < n; ++col) {
                    const Complex x = a(p, col), y = a(q, col);
                    a(p, col) = c * x + s * phase * y;
                    a(q, col) = -s * std::conj(phase) * x + c * y;
                }
            }
    }
    double best = a(0, 0).real();
    for (int i = 1; i < n; ++i) best = std::max(best, a(i, i).real());
    return best;
}

struct BestResponse {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<int> assignments;
};

// Earlier slots win ties, so the lexicographically first maximizer survives.
void merge_best(BestResponse& into, const BestResponse& chunk) {
    if (chunk.assignments.empty()) return;
    if (chunk.value > into.value) into = chunk;
}

void decode_mixed_radix(std::int64_t index, int base, std::vector<int>& digits) {
    for (int j = static_cast<int>(digits.size()) - 1; j >= 0; --j) {
        digits[j] = static_cast<int>(index % base);
        index /= base;
    }
}

ThresholdReport make_report(const MeasurementAssembly& assembly, BestResponse best) {
    const int d = assembly.dim();
    DeterministicResponse maximizer{std::move(best.assignments)};
    ComplexMatrix mix = response_mixture(assembly, maximizer);
    mix *= 1.0 / mix.trace().real();
    return ThresholdReport{best.value, geometric_from_fidelity(best.value, d), std::move(maximizer),
                           DensityOperator(std::move(mix))};
}

}  // namespace

ComplexMatrix response_mixture(const MeasurementAssembly& assembly, const DeterministicResponse& r) {
    if (static_cast<int>(r.assignments.size()) != assembly.size())
        throw validation_error("response length does not match the assembly");
    ComplexMatrix out(assembly.dim());
    for (int mu = 0; mu < assembly.size(); ++mu) {
        const int a = r.assignments[mu];
        if (a < 0 || a >= assembly.dim()) throw validation_error("response outcome out of range");
        ComplexMatrix term = assembly.measurement(mu).projector(a);
        term *= assembly.weight(mu);
        out += term;
    }
    return out;
}

ThresholdReport qubit_nst(const MeasurementAssembly& assembly) {
    if (assembly.dim() != 2) throw validation_error("sign enumeration requires qubit measurements");
    const int n = assembly.size();
    if (n > kQubitSettingBudget)
        throw budget_error("qubit enumeration budget exceeded: " + std::to_string(n) + " settings");

    std::vector<BlochVector> axes(n);
    for (int mu = 0; mu < n; ++mu) axes[mu] = qubit_axis(assembly.measurement(mu));

    // Global sign flip preserves |r|, so the first setting stays at '+'.
    const std::int64_t total = std::int64_t{1} << (n - 1);
    const int chunks = static_cast<int>(std::min<std::int64_t>(total, 4 * worker_count()));
    std::vector<BestResponse> slots(chunks);

    run_chunked(total, chunks, [&](std::int64_t begin, std::int64_t end, int slot) {
        std::vector<int> digits(n, 0);
        decode_mixed_radix(begin, 2, digits);  // top digit stays 0 for begin < 2^(n-1)
        std::vector<BlochVector> prefix(n + 1);
        auto extend = [&](int from) {
            for (int j = from; j < n; ++j) {
                const double sign = digits[j] == 0 ? 1.0 : -1.0;
                prefix[j + 1] = prefix[j] + (sign * assembly.weight(j)) * axes[j];
            }
        };
        extend(0);
        BestResponse best;
        for (std::int64_t i = begin; i < end; ++i) {
            const double g = norm(prefix[n]);
            if (g > best.value) {
                best.value = g;
                best.assignments = digits;
            }
            if (i + 1 < end) {
                int j = n - 1;
                while (digits[j] == 1) digits[j--] = 0;
                ++digits[j];
                extend(j);
            }
        }
        slots[slot] = std::move(best);
    });

    BestResponse best;
    for (const auto& slot : slots) merge_best(best, slot);

    DeterministicResponse maximizer{std::move(best.assignments)};
    BlochVector r{};
    for (int mu = 0; mu < n; ++mu) {
        const double sign = maximizer.assignments[mu] == 0 ? 1.0 : -1.0;
        r = r + (sign * assembly.weight(mu)) * axes[mu];
    }
    if (norm(r) > 1.0) r = normalized(r);  // axis round-off can overshoot the ball
    return ThresholdReport{0.5 * (1.0 + best.value), best.value, std::move(maximizer),
                           bloch_to_density(r)};
}

ThresholdReport general_nst(const MeasurementAssembly& assembly) {
    const int n = assembly.size();
    const int d = assembly.dim();
    std::int64_t total = 1;
    for (int mu = 0; mu < n; ++mu) {
        total *= d;
        if (total > kResponseBudget)
            throw budget_error("response enumeration budget exceeded: d^N > " +
                               std::to_string(kResponseBudget));
    }

    const int chunks = static_cast<int>(std::min<std::int64_t>(total, 4 * worker_count()));
    std::vector<BestResponse> slots(chunks);

    run_chunked(total, chunks, [&](std::int64_t begin, std::int64_t end, int slot) {
        std::vector<int> digits(n);
        decode_mixed_radix(begin, d, digits);
        std::vector<ComplexMatrix> prefix(n + 1, ComplexMatrix(d));
        ComplexMatrix term(d);
        auto extend = [&](int from) {
            for (int j = from; j < n; ++j) {
                term = assembly.measurement(j).projector(digits[j]);
                term *= assembly.weight(j);
                prefix[j + 1] = prefix[j];
                prefix[j + 1] += term;
            }
        };
        extend(0);
        BestResponse best;
        for (std::int64_t i = begin; i < end; ++i) {
            const double f = lambda_max_fast(prefix[n]);
            if (f > best.value) {
                best.value = f;
                best.assignments = digits;
            }
            if (i + 1 < end) {
                int j = n - 1;
                while (digits[j] == d - 1) digits[j--] = 0;
                ++digits[j];
                extend(j);
            }
        }
        slots[slot] = std::move(best);
    });

    BestResponse best;
    for (const auto& slot : slots) merge_best(best, slot);
    return make_report(assembly, std::move(best));
}

double two_setting_nst_from_unitary(const ComplexMatrix& u) {
    if (!is_unitary(u)) throw validation_error("two-setting threshold requires a unitary matrix");
    return 0.5 * (1.0 + u.max_abs());
}

double planar_nst(int n_settings) { return qubit_nst(planar_family(n_settings)).g_nst; }

double planar_nst_closed_form(int n_settings) {
    if (n_settings < 2) throw validation_error("planar family needs at least two settings");
    const int n = n_settings;
    const auto value = [n](double alpha) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += std::abs(std::cos(k * std::numbers::pi / n - alpha));
        return s / n;
    };

    // The objective has period pi/N; coarse grid, then golden-section.
    const double period = std::numbers::pi / n;
    const int grid = 4096;
    double best_alpha = 0.0, best_value = -1.0;
    for (int i = 0; i <= grid; ++i) {
        const double alpha = period * i / grid;
        const double v = value(alpha);
        if (v > best_value) {
            best_value = v;
            best_alpha = alpha;
        }
    }
    const double gold = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_alpha - period / grid, hi = best_alpha + period / grid;
    double x1 = hi - gold * (hi - lo), x2 = lo + gold * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gold * (hi - lo);
            f2 = value(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gold * (hi - lo);
            f1 = value(x1);
        }
    }
    return std::max({best_value, f1, f2});
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform_unit(std::uint64_t& state) {
    return static_cast<double>((splitmix64(state) >> 11) + 1) * 0x1.0p-53;
}

double stochastic_table_value(const MeasurementAssembly& assembly,
                              const std::vector<std::vector<double>>& table) {
    const int d = assembly.dim();
    ComplexMatrix rho(d);
    ComplexMatrix inner(d);
    ComplexMatrix term(d);
    for (int mu = 0; mu < assembly.size(); ++mu) {
        inner = ComplexMatrix(d);
        for (int a = 0; a < d; ++a) {
            term = assembly.measurement(mu).projector(a);
            term *= table[mu][a];
            inner += term;
        }
        inner *= assembly.weight(mu);
        rho += inner;
    }
    return lambda_max_fast(rho);
}

}  // namespace

double probabilistic_oracle(const MeasurementAssembly& assembly, std::int64_t samples,
                            std::uint64_t seed, bool include_deterministic) {
    if (samples < 1) throw validation_error("probabilistic oracle needs at least one sample");
    const int n = assembly.size();
    const int d = assembly.dim();

    const int chunks = static_cast<int>(std::min<std::int64_t>(samples, 4 * worker_count()));
    std::vector<double> slot_max(chunks, -std::numeric_limits<double>::infinity());

    run_chunked(samples, chunks, [&](std::int64_t begin, std::int64_t end, int slot) {
        std::vector<std::vector<double>> table(n, std::vector<double>(d));
        double best = -std::numeric_limits<double>::infinity();
        for (std::int64_t i = begin; i < end; ++i) {
            // Per-sample stream keyed to the index; partition-independent.
            std::uint64_t state = seed ^ (0xA24BAED4963EE407ULL * static_cast<std::uint64_t>(i + 1));
            for (int mu = 0; mu < n; ++mu) {
                double sum = 0.0;
                for (int a = 0; a < d; ++a) {
                    table[mu][a] = -std::log(uniform_unit(state));
                    sum += table[mu][a];
                }
                for (int a = 0; a < d; ++a) table[mu][a] /= sum;
            }
            best = std::max(best, stochastic_table_value(assembly, table));
        }
        slot_max[slot] = best;
    });

    double best = -std::numeric_limits<double>::infinity();
    for (double v : slot_max) best = std::max(best, v);

    if (include_deterministic) {
        std::int64_t total = 1;
        for (int mu = 0; mu < n; ++mu) {
            total *= d;
            if (total > kResponseBudget)
                throw budget_error("deterministic sweep exceeds the response budget");
        }
        std::vector<int> digits(n, 0);
        std::vector<std::vector<double>> table(n, std::vector<double>(d));
        for (std::int64_t i = 0; i < total; ++i) {
            decode_mixed_radix(i, d, digits);
            for (int mu = 0; mu < n; ++mu)
                for (int a = 0; a < d; ++a) table[mu][a] = digits[mu] == a ? 1.0 : 0.0;
            best = std::max(best, stochastic_table_value(assembly, table));
        }
    }
    return best;
}

double geometric_from_fidelity(double f, int d) {
    if (d < 2) throw validation_error("geometric rescaling needs dimension at least 2");
    if (f < 1.0 / d - 1e-12 || f > 1.0 + 1e-12)
        throw validation_error("fidelity " + std::to_string(f) + " outside [1/d, 1]");
    return (d * f - 1.0) / (d - 1.0);
}

}  // namespace steerkit
