#ifndef BELLCERT_CERTIFIER_HPP
#define BELLCERT_CERTIFIER_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "bellcert/behavior_table.hpp"

namespace bellcert {

// Everything in this header is computed from the correlation table alone;
// no assumption about the devices enters beyond the validity of quantum
// mechanics. For any bipartite pure state with coefficient spectrum
// (lambda_1, ..., lambda_d) that reproduces the table:
//
//   sum_i lambda_i^2  <=  min{f1, f2}          (purity bound)
//   d                 >=  1 / purity_bound      (dimension bound)
//   S(rho_A)          >= -log2(purity_bound)    (entropy bound, bits)
//   min nonzero lambda_i <= min ratio p(a|x)p(b|y)/p(ab|xy)
//
// and for a mixed shared state the purity bound applies to Tr(rho_A^2).

// Squared-coefficient bound minimized over pairs of Bob's settings:
//   min_{y1,y2} sum_{b1,b2} min_x ( sum_a sqrt(p(ab1|xy1) p(ab2|xy2)) )^2.
// The outer minimum includes y1 = y2. Throws PartialTable on incomplete input.
double f1(const BehaviorTable& table);

// Same bound with the parties' roles exchanged (pairs of Alice's settings,
// inner sum over Bob's outcomes). Loop order mirrors f1 exactly, so
// f2(p) == f1(swap_parties(p)) holds bitwise.
double f2(const BehaviorTable& table);

// min{f1, f2}: upper bound on the purity sum_i lambda_i^2 of any generating
// pure state (and on Tr(rho_A^2) for a generating mixed state).
double purity_bound(const BehaviorTable& table);

struct DimBound {
    bool finite = true;
    int value = 1; // meaningful only when finite

    friend bool operator==(const DimBound&, const DimBound&) = default;
};

// ceil(1 / purity_bound - ceil_slack); when the purity bound vanishes (at or
// below tol.zero) no finite-dimensional state can generate the table.
DimBound dim_lower_bound(const BehaviorTable& table, const Tolerances& tol = {});

// -log2(purity_bound), in bits; lower-bounds both the order-2 and the
// von Neumann entanglement entropy of any generating pure state.
// Throws InfiniteBound when the purity bound vanishes.
double entropy_lower_bound_bits(const BehaviorTable& table, const Tolerances& tol = {});

struct LambdaMinBound {
    bool vacuous = false; // no tuple qualified
    double value = 1.0;
    std::optional<Rational> exact; // set when every qualifying ratio was exact

    friend bool operator==(const LambdaMinBound&, const LambdaMinBound&) = default;
};

// Upper bound on the least nonzero Schmidt coefficient:
//   min over present tuples (x,y,a,b) of p(a|x) p(b|y) / p(ab|xy),
// clamped to [0,1]. Tuples with p(ab|xy) <= epsilon_p are skipped, as are
// tuples whose marginals are not computable (partial tables); both marginals
// are evaluated at the tuple's own (x, y). Works on partial tables; returns
// vacuous when nothing qualifies.
LambdaMinBound lambda_min_bound(const BehaviorTable& table, double epsilon_p = kDefaultEpsilonP);

struct ExclusionInterval {
    bool empty = true;
    double lo = 0.0, hi = 0.0;
    std::optional<Rational> lo_exact, hi_exact;
};

// With t = lambda_min_bound: the table cannot come from sqrt(a)|00> +
// sqrt(1-a)|11> on C^2 x C^2 for any a in (t, 1-t); empty when t >= 1/2
// or the bound is vacuous.
ExclusionInterval exclude_two_qubit_range(const BehaviorTable& table,
                                          double epsilon_p = kDefaultEpsilonP);

// True when lambda_min_bound < 1/d (strictly, on the exact path; with a
// tol.zero guard on the float path): no maximally entangled state of local
// dimension <= d generates the table.
bool exclude_maximally_entangled(const BehaviorTable& table, int d,
                                 double epsilon_p = kDefaultEpsilonP,
                                 const Tolerances& tol = {});

// Entanglement-of-formation lower bound (bits) for a shared mixed state
// assumed close to pure, Tr(rho^2) > 1 - eta, with a known local-dimension
// cap d. Not fully device-independent: eta and d are caller-supplied
// hypotheses. Chain:
//   a1      >= 1/2 + sqrt((1/2)(1/2 - eta))         (largest ensemble weight)
//   Tr(rho_A1^2) <= purity_bound / a1^2              (purity transfer)
//   E_f(psi_1)   >= -log2(purity_bound / a1^2)
//   E_f(rho)     >= the above - sqrt(2 eta) (9 log2 d - log2(2 eta)),
// clamped at zero. Throws EtaOutOfRange unless 0 < eta < 1/2, PartialTable
// on incomplete tables. Returns +infinity when the purity bound vanishes.
double ef_lower_bound(const BehaviorTable& table, double eta, int d,
                      const Tolerances& tol = {});

struct CertifyOptions {
    double epsilon_p = kDefaultEpsilonP;
    Tolerances tolerances;
    // When set, the report also carries ef_lower_bound(eta, d).
    std::optional<double> eta;
    std::optional<int> ef_dim;
};

// Aggregate of every bound for one table. Fields derived from f1/f2 are
// absent for partial tables (partial_input = true).
struct BoundsReport {
    bool partial_input = false;
    std::optional<double> f1, f2, purity_bound;
    std::optional<DimBound> dim_lower_bound;
    std::optional<double> entropy_bits; // may be +infinity
    LambdaMinBound lambda_min;
    std::optional<double> ef_bits;
    std::optional<double> ef_eta;
    std::optional<int> ef_dim;
    double epsilon_p = kDefaultEpsilonP;
    Tolerances tolerances;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

BoundsReport certify(const BehaviorTable& table, const CertifyOptions& options = {});

} // namespace bellcert

#endif
