#ifndef BELLCERT_SCENARIOS_HPP
#define BELLCERT_SCENARIOS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bellcert/behavior_table.hpp"
#include "bellcert/quantum.hpp"

namespace bellcert::scenarios {

// Expected certifier output for one quantity of a stock correlation, kept
// next to the table so tests and the CLI can cross-check and display it.
// `expected` is an exact rational "num/den", a decimal, an integer, or the
// flag "no_finite_dim"; `note` records why the value is what it is.
struct BoundAnnotation {
    std::string quantity;
    std::string expected;
    std::string note;
};

// A canonical correlation: its table, optionally a quantum realization that
// reproduces the table entrywise within 1e-10 under the simulator, and the
// bound values it is known to produce.
struct NamedScenario {
    std::string id;
    std::string summary;
    BehaviorTable table;
    std::optional<sim::ExperimentSpec> realization;
    std::vector<BoundAnnotation> annotations;
};

// Winning correlation of the CHSH game: p(ab|xy) = (2+sqrt(2))/8 when
// a xor b = x and y, (2-sqrt(2))/8 otherwise. Ships with its two-qubit
// realization (EPR pair, Z/X for Alice, (Z±X)/sqrt(2) for Bob).
NamedScenario chsh();

// Winning correlation of the Magic Square game: settings pick a row (Alice)
// and column (Bob) of a 3x3 grid, outcomes are bit triples 0-7 (value 0-7 =
// bits a1 a2 a3, most significant first); p = 1/8 exactly when Alice's
// triple has even parity, Bob's has odd parity, and they agree on the shared
// cell (Alice's bit y equals Bob's bit x). Exact rational entries; no
// realization bundled.
NamedScenario magic_square();

// BB84 correlation p(ab|xy) = (1 + ab·[x=y])/4 over labels a, b in {-1, +1},
// stored with -1 -> index 0 and +1 -> index 1. Exact rational entries, with
// the EPR realization measuring Z (setting 0) or X (setting 1) on each side.
NamedScenario bb84();

// PR box: p(ab|xy) = 1/2 when a xor b = x and y, else 0. No-signaling but
// not quantum; no realization exists. Exact rational entries.
NamedScenario pr_box();

// Single-setting 3x3-outcome partial table with five exact entries
// (p(00) = 1/10, the four adjacent entries 1/100) and the remaining four
// tuples unspecified. Exercises the partial-table bound paths.
NamedScenario partial_exclusion_example();

// Stable identifiers in listing order:
// chsh, magic-square, bb84, pr-box, partial-3x3.
const std::vector<std::string>& scenario_ids();
std::optional<NamedScenario> find_scenario(const std::string& id);

} // namespace bellcert::scenarios

#endif
