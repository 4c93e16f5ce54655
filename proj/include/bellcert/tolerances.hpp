#ifndef BELLCERT_TOLERANCES_HPP
#define BELLCERT_TOLERANCES_HPP

namespace bellcert {

// Numerical tolerances. The canonical tables are exact rationals; these only
// absorb float ingestion noise, so they are deliberately tight.
struct Tolerances {
    double norm = 1e-9;         // per-(x,y) normalization slack
    double no_signaling = 1e-9; // marginal agreement across the other party's settings
    double clamp = 1e-12;       // ingestion clamp window around [0,1]
    double zero = 1e-12;        // purity bound at or below this reads as exactly zero
    double ceil_slack = 1e-9;   // subtracted before ceil() in the dimension bound
};

// Joint probabilities at or below this are skipped when minimizing the
// marginal-product ratios for the smallest-coefficient bound.
inline constexpr double kDefaultEpsilonP = 1e-12;

} // namespace bellcert

#endif
