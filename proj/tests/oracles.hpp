#ifndef BELLCERT_TESTS_ORACLES_HPP
#define BELLCERT_TESTS_ORACLES_HPP

// Reference implementations used only by the tests. Each is deliberately
// written in a different shape from the library routine it checks (different
// loop order, different intermediate storage), so agreement between the two
// is evidence rather than tautology.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "bellcert/behavior_table.hpp"

namespace oracles {

// f1 restructured: the x loop is outermost, inner sums land in a
// (y1, y2, b1, b2)-indexed array of running minima, aggregated afterwards.
inline double reference_f1(const bellcert::BehaviorTable& t) {
    const int nx = t.n_x(), ny = t.n_y(), na = t.n_a(), nb = t.n_b();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> inner(static_cast<std::size_t>(ny) * ny * nb * nb, inf);
    auto idx = [&](int y1, int y2, int b1, int b2) {
        return ((static_cast<std::size_t>(y1) * ny + y2) * nb + b1) * nb + b2;
    };
    for (int x = 0; x < nx; ++x)
        for (int y1 = 0; y1 < ny; ++y1)
            for (int y2 = 0; y2 < ny; ++y2)
                for (int b1 = 0; b1 < nb; ++b1)
                    for (int b2 = 0; b2 < nb; ++b2) {
                        double s = 0.0;
                        for (int a = 0; a < na; ++a)
                            s += std::sqrt(t.prob(x, y1, a, b1) * t.prob(x, y2, a, b2));
                        inner[idx(y1, y2, b1, b2)] = std::min(inner[idx(y1, y2, b1, b2)], s);
                    }
    double best = inf;
    for (int y1 = 0; y1 < ny; ++y1)
        for (int y2 = 0; y2 < ny; ++y2) {
            double total = 0.0;
            for (int b1 = 0; b1 < nb; ++b1)
                for (int b2 = 0; b2 < nb; ++b2) {
                    const double m = inner[idx(y1, y2, b1, b2)];
                    total += m * m;
                }
            best = std::min(best, total);
        }
    return best;
}

// Hand-rolled party swap (no call into the library's swap_parties).
inline bellcert::BehaviorTable manual_swap(const bellcert::BehaviorTable& t) {
    bellcert::TableBuilder builder(t.n_y(), t.n_x(), t.n_b(), t.n_a());
    for (int x = 0; x < t.n_x(); ++x)
        for (int y = 0; y < t.n_y(); ++y)
            for (int a = 0; a < t.n_a(); ++a)
                for (int b = 0; b < t.n_b(); ++b) {
                    const auto& e = t.at(x, y, a, b);
                    if (!e)
                        continue;
                    if (e->exact)
                        builder.set(y, x, b, a, *e->exact);
                    else
                        builder.set(y, x, b, a, e->value);
                }
    return builder.build();
}

inline double reference_f2(const bellcert::BehaviorTable& t) {
    return reference_f1(manual_swap(t));
}

// Smallest-coefficient bound by direct enumeration. Marginals are summed
// inline; tuples whose row or column is not fully present are skipped.
// Returns +infinity when no tuple qualifies (the vacuous case).
inline double reference_lambda_min(const bellcert::BehaviorTable& t, double eps) {
    double best = std::numeric_limits<double>::infinity();
    for (int x = 0; x < t.n_x(); ++x)
        for (int y = 0; y < t.n_y(); ++y)
            for (int a = 0; a < t.n_a(); ++a)
                for (int b = 0; b < t.n_b(); ++b) {
                    const auto& joint = t.at(x, y, a, b);
                    if (!joint || joint->value <= eps)
                        continue;
                    double pa = 0.0, pb = 0.0;
                    bool ok = true;
                    for (int bb = 0; bb < t.n_b() && ok; ++bb) {
                        const auto& e = t.at(x, y, a, bb);
                        if (!e)
                            ok = false;
                        else
                            pa += e->value;
                    }
                    for (int aa = 0; aa < t.n_a() && ok; ++aa) {
                        const auto& e = t.at(x, y, aa, b);
                        if (!e)
                            ok = false;
                        else
                            pb += e->value;
                    }
                    if (!ok)
                        continue;
                    best = std::min(best, std::min(1.0, pa * pb / joint->value));
                }
    return best;
}

// Random relabeling of settings and, per setting, outcomes.
struct Relabeling {
    std::vector<int> px, py;               // settings
    std::vector<std::vector<int>> pa, pb;  // outcomes, indexed by original setting
};

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i)
        p[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[i], p[rng() % static_cast<std::uint64_t>(i + 1)]);
    return p;
}

inline Relabeling random_relabeling(std::mt19937_64& rng, const bellcert::BehaviorTable& t) {
    Relabeling r;
    r.px = random_permutation(rng, t.n_x());
    r.py = random_permutation(rng, t.n_y());
    for (int x = 0; x < t.n_x(); ++x)
        r.pa.push_back(random_permutation(rng, t.n_a()));
    for (int y = 0; y < t.n_y(); ++y)
        r.pb.push_back(random_permutation(rng, t.n_b()));
    return r;
}

inline bellcert::BehaviorTable apply_relabeling(const bellcert::BehaviorTable& t,
                                                const Relabeling& r) {
    bellcert::TableBuilder builder(t.n_x(), t.n_y(), t.n_a(), t.n_b());
    for (int x = 0; x < t.n_x(); ++x)
        for (int y = 0; y < t.n_y(); ++y)
            for (int a = 0; a < t.n_a(); ++a)
                for (int b = 0; b < t.n_b(); ++b) {
                    const auto& e = t.at(x, y, a, b);
                    if (!e)
                        continue;
                    const int x2 = r.px[x], y2 = r.py[y];
                    const int a2 = r.pa[x][a], b2 = r.pb[y][b];
                    if (e->exact)
                        builder.set(x2, y2, a2, b2, *e->exact);
                    else
                        builder.set(x2, y2, a2, b2, e->value);
                }
    return builder.build();
}

// Largest entrywise deviation between two complete tables of equal shape.
inline double max_table_diff(const bellcert::BehaviorTable& s, const bellcert::BehaviorTable& t) {
    double worst = 0.0;
    for (int x = 0; x < s.n_x(); ++x)
        for (int y = 0; y < s.n_y(); ++y)
            for (int a = 0; a < s.n_a(); ++a)
                for (int b = 0; b < s.n_b(); ++b)
                    worst = std::max(worst, std::abs(s.prob(x, y, a, b) - t.prob(x, y, a, b)));
    return worst;
}

// Overlap sum_i sqrt(p_i q_i) between two outcome distributions.
inline double distribution_overlap(const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        s += std::sqrt(std::max(0.0, p[i]) * std::max(0.0, q[i]));
    return s;
}

// Test-local density matrix source with its own Gaussian conversion, kept
// separate from the library's generator on purpose.
class DensitySource {
  public:
    explicit DensitySource(std::uint64_t seed) : rng_(seed) {}

    Eigen::MatrixXcd density(int d) {
        Eigen::MatrixXcd w(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                w(i, j) = std::complex<double>(normal(), normal());
        Eigen::MatrixXcd rho = w * w.adjoint();
        rho /= rho.trace().real();
        return rho;
    }

  private:
    double normal() {
        // Marsaglia polar method: a different conversion than the library's.
        if (have_) {
            have_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_ = true;
        return u * f;
    }

    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }

    std::mt19937_64 rng_;
    bool have_ = false;
    double spare_ = 0.0;
};

} // namespace oracles

#endif
