// Acceptance gate: one line per criterion, [PASS]/[FAIL]/[SKIP], nonzero exit
// on any failure. Kept separate from the unit suite so the full contract can
// be replayed (and read) in one place.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bellcert/certifier.hpp"
#include "bellcert/quantum.hpp"
#include "bellcert/scenarios.hpp"
#include "oracles.hpp"

using namespace bellcert;
using sim::Matrix;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (index < 10 ? "0" : "") << index << " " << name
              << ": " << detail << "\n";
    if (!ok)
        ++g_failures;
}

void skip(int index, const char* name, const std::string& detail) {
    std::cout << "[SKIP] " << index << " " << name << ": " << detail << "\n";
}

void criterion(int index, const char* name,
               const std::function<std::pair<bool, std::string>()>& body) {
    try {
        const auto [ok, detail] = body();
        report(index, name, ok, detail);
    } catch (const std::exception& e) {
        report(index, name, false, std::string("exception: ") + e.what());
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// The shared 500-instance pure-state sweep of criteria 6 and 7: local
// dimension cycles through {2,3,4}, settings through 1..3, outcomes 2..3.
sim::ExperimentSpec sweep_instance(int i) {
    const int d = 2 + i % 3;
    const int n_x = 1 + i % 3;
    const int n_y = 1 + (i / 3) % 3;
    const int n_a = 2 + i % 2;
    const int n_b = 2 + (i / 2) % 2;
    return sim::random_instance(d, n_x, n_y, n_a, n_b, 1000 + static_cast<std::uint64_t>(i));
}

} // namespace

int main() {
    criterion(1, "chsh tightness", [] {
        const auto r = certify(scenarios::chsh().table);
        const bool ok = std::abs(*r.purity_bound - 0.5) <= 1e-9 &&
                        *r.dim_lower_bound == DimBound{true, 2} &&
                        std::abs(*r.entropy_bits - 1.0) <= 1e-9;
        return std::make_pair(ok, "purity_bound=" + fmt(*r.purity_bound) +
                                      " dim=" + std::to_string(r.dim_lower_bound->value) +
                                      " entropy_bits=" + fmt(*r.entropy_bits));
    });

    criterion(2, "magic square tightness", [] {
        const auto r = certify(scenarios::magic_square().table);
        const bool ok = std::abs(*r.purity_bound - 0.25) <= 1e-9 &&
                        *r.dim_lower_bound == DimBound{true, 4};
        return std::make_pair(ok, "purity_bound=" + fmt(*r.purity_bound) +
                                      " dim=" + std::to_string(r.dim_lower_bound->value));
    });

    criterion(3, "bb84 rational path", [] {
        const auto b = lambda_min_bound(scenarios::bb84().table);
        const bool ok = !b.vacuous && b.exact && *b.exact == Rational(1, 2) && b.value == 0.5;
        return std::make_pair(ok, "lambda_min_bound=" +
                                      (b.exact ? b.exact->str() : fmt(b.value)));
    });

    criterion(4, "partial-table exclusion", [] {
        const auto& t = scenarios::partial_exclusion_example().table;
        const auto b = lambda_min_bound(t);
        bool ok = !b.vacuous && b.exact && *b.exact == Rational(18, 125);
        for (int d = 3; d <= 6; ++d)
            ok = ok && exclude_maximally_entangled(t, d);
        ok = ok && !exclude_maximally_entangled(t, 7);
        const auto iv = exclude_two_qubit_range(t);
        ok = ok && !iv.empty && iv.lo_exact && iv.hi_exact &&
             *iv.lo_exact == Rational(18, 125) && *iv.hi_exact == Rational(107, 125);
        return std::make_pair(
            ok, "lambda_min_bound=" + (b.exact ? b.exact->str() : fmt(b.value)) +
                    " excluded d=3..6, allowed d=7, interval=(" +
                    (iv.lo_exact ? iv.lo_exact->str() : fmt(iv.lo)) + ", " +
                    (iv.hi_exact ? iv.hi_exact->str() : fmt(iv.hi)) + ")");
    });

    criterion(5, "pr box non-quantumness", [] {
        const auto r = certify(scenarios::pr_box().table);
        const bool ok = *r.purity_bound <= 1e-12 && r.dim_lower_bound &&
                        !r.dim_lower_bound->finite;
        return std::make_pair(ok, "purity_bound=" + fmt(*r.purity_bound) + " dim=no_finite_dim");
    });

    criterion(6, "purity bound soundness, 500 pure instances", [] {
        int violations = 0;
        double worst = -1.0; // most positive purity - bound margin seen
        for (int i = 0; i < 500; ++i) {
            const auto spec = sweep_instance(i);
            const double actual =
                sim::schmidt(std::get<sim::PureState>(spec.state)).sum_squares();
            const double bound = purity_bound(sim::simulate(spec));
            worst = std::max(worst, actual - bound);
            if (actual > bound + 1e-9)
                ++violations;
        }
        return std::make_pair(violations == 0, "violations=" + std::to_string(violations) +
                                                   " worst_margin=" + fmt(worst));
    });

    criterion(7, "smallest-coefficient soundness, full-rank subset", [] {
        int checked = 0, violations = 0;
        double worst = -1.0;
        for (int i = 0; i < 500; ++i) {
            const auto spec = sweep_instance(i);
            const auto spectrum = sim::schmidt(std::get<sim::PureState>(spec.state));
            const double lam_min = spectrum.min_coefficient();
            if (lam_min < 1e-6) // not comfortably full rank: out of scope here
                continue;
            ++checked;
            const auto b = lambda_min_bound(sim::simulate(spec));
            const double bound = b.vacuous ? 1.0 : b.value;
            worst = std::max(worst, lam_min - bound);
            if (lam_min > bound + 1e-9)
                ++violations;
        }
        const bool ok = violations == 0 && checked >= 400;
        return std::make_pair(ok, "checked=" + std::to_string(checked) +
                                      " violations=" + std::to_string(violations) +
                                      " worst_margin=" + fmt(worst));
    });

    criterion(8, "purity bound soundness, 200 mixed instances", [] {
        int violations = 0;
        double worst = -1.0;
        for (int i = 0; i < 200; ++i) {
            const int d = 2 + i % 2;
            const auto spec = sim::random_mixed_instance(d, 1 + i % 2, 1 + (i / 2) % 2,
                                                         2 + i % 2, 2 + (i / 3) % 2,
                                                         2000 + static_cast<std::uint64_t>(i));
            const auto& st = std::get<sim::MixedState>(spec.state);
            const double actual = sim::purity(sim::partial_trace_b(st.rho(), d, d));
            const double bound = purity_bound(sim::simulate(spec));
            worst = std::max(worst, actual - bound);
            if (actual > bound + 1e-9)
                ++violations;
        }
        return std::make_pair(violations == 0, "violations=" + std::to_string(violations) +
                                                   " worst_margin=" + fmt(worst));
    });

    criterion(9, "proof-chain invariants", [] {
        int fidelity_violations = 0, identity_violations = 0, overlap_violations = 0;
        for (int i = 0; i < 100; ++i) {
            const int d = 2 + i % 3;
            const int n_b = 2 + i % 2;
            const auto spec =
                sim::random_instance(d, 2, 2, 2, n_b, 3000 + static_cast<std::uint64_t>(i));
            const auto& st = std::get<sim::PureState>(spec.state);
            const auto frame = sim::schmidt_frame(st);
            const auto t = sim::simulate(spec);
            const int r = frame.spectrum.size();
            const int n_y = 2;

            std::vector<std::vector<double>> pb(n_y, std::vector<double>(n_b, 0.0));
            for (int y = 0; y < n_y; ++y)
                for (int b = 0; b < n_b; ++b)
                    for (int a = 0; a < t.n_a(); ++a)
                        pb[y][b] += t.prob(0, y, a, b);

            // Conditional-state fidelity never exceeds the distribution overlap.
            for (int y1 = 0; y1 < n_y; ++y1)
                for (int b1 = 0; b1 < n_b; ++b1)
                    for (int y2 = 0; y2 < n_y; ++y2)
                        for (int b2 = 0; b2 < n_b; ++b2) {
                            if (pb[y1][b1] <= 1e-9 || pb[y2][b2] <= 1e-9)
                                continue;
                            const Matrix r1 = sim::rho_yb(
                                frame.spectrum,
                                frame.rotate_bob(spec.povms_b[y1].effect(b1)), pb[y1][b1]);
                            const Matrix r2 = sim::rho_yb(
                                frame.spectrum,
                                frame.rotate_bob(spec.povms_b[y2].effect(b2)), pb[y2][b2]);
                            const double f = sim::fidelity(r1, r2);
                            for (int x = 0; x < t.n_x(); ++x) {
                                double overlap = 0.0;
                                for (int a = 0; a < t.n_a(); ++a)
                                    overlap += std::sqrt(
                                        std::max(0.0, t.prob(x, y1, a, b1) / pb[y1][b1]) *
                                        std::max(0.0, t.prob(x, y2, a, b2) / pb[y2][b2]));
                                if (f > overlap + 1e-9)
                                    ++fidelity_violations;
                            }
                        }

            // Summing the conditioned (unnormalized) states over outcomes
            // returns the squared spectrum: a completeness identity.
            Matrix d2 = Matrix::Zero(r, r);
            for (int k = 0; k < r; ++k)
                d2(k, k) = frame.spectrum.coefficients()[k];
            const double expected = frame.spectrum.sum_squares();
            for (int y1 = 0; y1 < n_y; ++y1)
                for (int y2 = 0; y2 < n_y; ++y2) {
                    double total = 0.0;
                    for (int b1 = 0; b1 < n_b; ++b1)
                        for (int b2 = 0; b2 < n_b; ++b2) {
                            const Matrix n1 = frame.rotate_bob(spec.povms_b[y1].effect(b1))
                                                  .topLeftCorner(r, r)
                                                  .conjugate();
                            const Matrix n2 = frame.rotate_bob(spec.povms_b[y2].effect(b2))
                                                  .topLeftCorner(r, r)
                                                  .conjugate();
                            total += std::real((n1 * d2 * n2 * d2).trace());
                        }
                    if (std::abs(total - expected) > 1e-9)
                        ++identity_violations;
                }
        }

        oracles::DensitySource src(9090);
        for (int i = 0; i < 100; ++i) {
            const int d = 2 + i % 3;
            const Matrix rho = src.density(d);
            const Matrix sigma = src.density(d);
            const double f = sim::fidelity(rho, sigma);
            if (sim::trace_overlap(rho, sigma) > f * f + 1e-9)
                ++overlap_violations;
        }

        const bool ok =
            fidelity_violations == 0 && identity_violations == 0 && overlap_violations == 0;
        return std::make_pair(ok, "fidelity_violations=" + std::to_string(fidelity_violations) +
                                      " identity_violations=" +
                                      std::to_string(identity_violations) +
                                      " overlap_violations=" +
                                      std::to_string(overlap_violations));
    });

    criterion(10, "dual simulation routes agree", [] {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const auto spec = sim::random_instance(2 + i % 3, 1 + i % 3, 1 + (i / 3) % 3,
                                                   2 + i % 2, 2 + (i / 2) % 2,
                                                   4000 + static_cast<std::uint64_t>(i));
            worst = std::max(worst, oracles::max_table_diff(
                                        sim::simulate(spec), sim::simulate_trace_formula(spec)));
        }
        const auto chsh = scenarios::chsh();
        const double chsh_diff =
            oracles::max_table_diff(sim::simulate(*chsh.realization), chsh.table);
        const bool ok = worst <= 1e-10 && chsh_diff <= 1e-10;
        return std::make_pair(ok, "worst_route_diff=" + fmt(worst) +
                                      " chsh_realization_diff=" + fmt(chsh_diff));
    });

    criterion(11, "relabeling invariance", [] {
        bool swap_exact = true;
        for (const char* id : {"chsh", "magic-square", "bb84", "pr-box"}) {
            const auto t = scenarios::find_scenario(id)->table;
            swap_exact = swap_exact && f2(t) == f1(swap_parties(t));
        }

        std::mt19937_64 rng(5555);
        double worst = 0.0;
        const BehaviorTable bases[] = {
            scenarios::chsh().table, scenarios::magic_square().table,
            sim::simulate(sim::random_instance(3, 2, 3, 2, 2, 5050))};
        for (int rep = 0; rep < 50; ++rep) {
            const auto& t = bases[rep % 3];
            const auto relabeled = oracles::apply_relabeling(
                t, oracles::random_relabeling(rng, t));
            worst = std::max(worst, std::abs(f1(relabeled) - f1(t)));
            worst = std::max(worst, std::abs(f2(relabeled) - f2(t)));
            worst = std::max(worst,
                             std::abs(lambda_min_bound(relabeled).value -
                                      lambda_min_bound(t).value));
        }
        const bool ok = swap_exact && worst <= 1e-12;
        return std::make_pair(ok, std::string("swap_bitwise=") + (swap_exact ? "yes" : "no") +
                                      " worst_relabeling_drift=" + fmt(worst) + " (50 relabelings)");
    });

    criterion(12, "entanglement-of-formation chain", [] {
        const auto& t = scenarios::chsh().table;
        const double near_pure = ef_lower_bound(t, 1e-12, 2);
        bool ok = std::abs(near_pure - 1.0) <= 1e-3;
        double prev = near_pure;
        bool monotone = true;
        for (double eta : {1e-6, 1e-4, 1e-2, 0.1, 0.3}) {
            const double v = ef_lower_bound(t, eta, 2);
            monotone = monotone && v <= prev + 1e-15 && v >= 0.0;
            prev = v;
        }
        const bool clamps = ef_lower_bound(t, 0.3, 2) == 0.0;
        ok = ok && monotone && clamps;
        return std::make_pair(ok, "ef(eta=1e-12)=" + fmt(near_pure) +
                                      " monotone=" + (monotone ? "yes" : "no") +
                                      " clamps_at_zero=" + (clamps ? "yes" : "no"));
    });

    skip(13, "i3322 entropy figure",
         "the known 0.67-bit entropy value for this correlation comes from an external "
         "49-dimensional numerical approximation; no such data ships with this repository, "
         "so the value is deliberately not asserted");

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed (1 documented skip)\n"
                                  : "acceptance: " + std::to_string(g_failures) +
                                        " criterion(s) FAILED\n");
    return g_failures == 0 ? 0 : 1;
}
