#include "bellcert/scenarios.hpp"

#include <cmath>
#include <numbers>

namespace bellcert::scenarios {

namespace {

using sim::Cplx;
using sim::Matrix;

// Two-outcome projective qubit measurement along cos(theta) Z + sin(theta) X,
// outcome 0 on the +1 eigenvector.
sim::Povm projective_pair(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    Matrix p0(2, 2);
    p0 << Cplx(0.5 * (1.0 + c)), Cplx(0.5 * s), Cplx(0.5 * s), Cplx(0.5 * (1.0 - c));
    const Matrix p1 = Matrix::Identity(2, 2) - p0;
    return sim::Povm({p0, p1});
}

sim::PureState epr_pair() {
    Matrix amp = Matrix::Zero(2, 2);
    amp(0, 0) = amp(1, 1) = std::numbers::sqrt2 / 2.0;
    return sim::PureState(std::move(amp));
}

int bit(int k, int i) { return (k >> (2 - i)) & 1; } // i = 0 is the leading bit

int parity(int k) { return bit(k, 0) ^ bit(k, 1) ^ bit(k, 2); }

} // namespace

NamedScenario chsh() {
    const double q = std::sqrt(2.0);
    const double win = (2.0 + q) / 8.0;
    const double lose = (2.0 - q) / 8.0;
    TableBuilder builder(2, 2, 2, 2);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    builder.set(x, y, a, b, ((a ^ b) == (x & y)) ? win : lose);

    sim::ExperimentSpec realization{
        epr_pair(),
        {projective_pair(0.0), projective_pair(std::numbers::pi / 2.0)},
        {projective_pair(std::numbers::pi / 4.0), projective_pair(-std::numbers::pi / 4.0)}};

    return NamedScenario{
        "chsh",
        "optimal quantum correlation for the CHSH game",
        builder.build(),
        std::move(realization),
        {{"purity_bound", "1/2", "tight: the bundled two-qubit realization saturates it"},
         {"dim_lower_bound", "2", "entanglement certified from the table alone"},
         {"lambda_min_bound", "0.5857864376269049",
          "2 - sqrt(2): uniform marginals over the largest entry (2+sqrt(2))/8"}}};
}

NamedScenario magic_square() {
    TableBuilder builder(3, 3, 8, 8);
    const Rational hit(1, 8);
    const Rational miss(0, 1);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int a = 0; a < 8; ++a)
                for (int b = 0; b < 8; ++b) {
                    const bool wins = parity(a) == 0 && parity(b) == 1 && bit(a, y) == bit(b, x);
                    builder.set(x, y, a, b, wins ? hit : miss);
                }

    return NamedScenario{
        "magic-square",
        "optimal quantum correlation for the Magic Square game",
        builder.build(),
        std::nullopt,
        {{"purity_bound", "1/4", "tight: two EPR pairs on C^4 x C^4 realize the table"},
         {"dim_lower_bound", "4", "ceil of 1 / purity_bound"},
         {"lambda_min_bound", "1/2", "marginals are all 1/4 and nonzero entries 1/8"}}};
}

NamedScenario bb84() {
    TableBuilder builder(2, 2, 2, 2);
    const Rational half(1, 2);
    const Rational quarter(1, 4);
    const Rational zero(0, 1);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    builder.set(x, y, a, b, x == y ? (a == b ? half : zero) : quarter);

    // Setting 0 measures Z, setting 1 measures X; index 0 is the -1 outcome.
    auto basis = [](double theta) {
        sim::Povm plus_first = projective_pair(theta);
        return sim::Povm({plus_first.effect(1), plus_first.effect(0)});
    };
    sim::ExperimentSpec realization{epr_pair(),
                                    {basis(0.0), basis(std::numbers::pi / 2.0)},
                                    {basis(0.0), basis(std::numbers::pi / 2.0)}};

    return NamedScenario{
        "bb84",
        "matched-basis correlation of the BB84 states",
        builder.build(),
        std::move(realization),
        {{"purity_bound", "1/2", "matched-basis blocks are perfectly correlated"},
         {"dim_lower_bound", "2", "entanglement certified from the table alone"},
         {"lambda_min_bound", "1/2", "tight: the bundled EPR realization attains it"}}};
}

NamedScenario pr_box() {
    TableBuilder builder(2, 2, 2, 2);
    const Rational half(1, 2);
    const Rational zero(0, 1);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    builder.set(x, y, a, b, ((a ^ b) == (x & y)) ? half : zero);

    return NamedScenario{
        "pr-box",
        "no-signaling extreme point winning the CHSH game with certainty",
        builder.build(),
        std::nullopt,
        {{"purity_bound", "0", "three perfectly correlated blocks and one anti-correlated "
                               "block leave no common outcome overlap"},
         {"dim_lower_bound", "no_finite_dim",
          "no finite-dimensional quantum state reproduces this box"},
         {"lambda_min_bound", "1/2", "every nonzero entry gives ratio (1/2 * 1/2) / (1/2)"}}};
}

NamedScenario partial_exclusion_example() {
    TableBuilder builder(1, 1, 3, 3);
    builder.set(0, 0, 0, 0, Rational(1, 10));
    builder.set(0, 0, 0, 1, Rational(1, 100));
    builder.set(0, 0, 0, 2, Rational(1, 100));
    builder.set(0, 0, 1, 0, Rational(1, 100));
    builder.set(0, 0, 2, 0, Rational(1, 100));

    return NamedScenario{
        "partial-3x3",
        "five known entries of a single-setting table; the rest unspecified",
        builder.build(),
        std::nullopt,
        {{"lambda_min_bound", "18/125",
          "only the (0,0) tuple has both marginals determined: (3/25)^2 / (1/10)"}}};
}

const std::vector<std::string>& scenario_ids() {
    static const std::vector<std::string> ids{"chsh", "magic-square", "bb84", "pr-box",
                                              "partial-3x3"};
    return ids;
}

std::optional<NamedScenario> find_scenario(const std::string& id) {
    if (id == "chsh") return chsh();
    if (id == "magic-square") return magic_square();
    if (id == "bb84") return bb84();
    if (id == "pr-box") return pr_box();
    if (id == "partial-3x3") return partial_exclusion_example();
    return std::nullopt;
}

} // namespace bellcert::scenarios
