#ifndef BELLCERT_BEHAVIOR_TABLE_HPP
#define BELLCERT_BEHAVIOR_TABLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellcert/errors.hpp"
#include "bellcert/rational.hpp"
#include "bellcert/tolerances.hpp"

namespace bellcert {

// A probability together with its exact rational origin, when it has one.
// Entries ingested as "num/den" strings keep the rational; float entries
// carry only the double.
struct ProbValue {
    double value = 0.0;
    std::optional<Rational> exact;
};

// The conditional joint distribution p(ab|xy) of a two-party experiment:
// x, y index the parties' measurement settings, a, b their outcomes.
// A table may be partial (some tuples unspecified); completeness is a
// queryable flag, not a constructor requirement. Immutable once built.
class BehaviorTable {
  public:
    BehaviorTable(int n_x, int n_y, int n_a, int n_b,
                  std::vector<std::optional<ProbValue>> entries);

    int n_x() const { return n_x_; }
    int n_y() const { return n_y_; }
    int n_a() const { return n_a_; }
    int n_b() const { return n_b_; }

    bool has(int x, int y, int a, int b) const { return at(x, y, a, b).has_value(); }
    const std::optional<ProbValue>& at(int x, int y, int a, int b) const;

    // Throws MissingEntries when the tuple is unspecified.
    double prob(int x, int y, int a, int b) const;

    bool complete() const;
    std::size_t present_count() const;
    // True when every present entry carries an exact rational.
    bool all_exact() const;

    // Document format: {n_x, n_y, n_a, n_b, entries} where entries is either
    // a dense nested array [x][y][a][b] (null = unspecified) or a sparse list
    // of {x, y, a, b, p} records. Probabilities are decimal floats or exact
    // rational strings "num/den". Serialization emits the dense form, with
    // rationals written back as "num/den" strings so the round trip is exact.
    static BehaviorTable from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;

  private:
    std::size_t index(int x, int y, int a, int b) const;

    int n_x_, n_y_, n_a_, n_b_;
    std::vector<std::optional<ProbValue>> entries_;
};

// Incremental construction for generators and parsers. Values in
// [-clamp, 0) and (1, 1+clamp] are clamped onto the boundary; anything
// further out is stored as-is for validation to flag.
class TableBuilder {
  public:
    TableBuilder(int n_x, int n_y, int n_a, int n_b, double clamp = Tolerances{}.clamp);

    TableBuilder& set(int x, int y, int a, int b, double p);
    TableBuilder& set(int x, int y, int a, int b, const Rational& p);

    BehaviorTable build() const;

  private:
    int n_x_, n_y_, n_a_, n_b_;
    double clamp_;
    std::vector<std::optional<ProbValue>> entries_;
};

enum class Party { alice, bob };

// One party's outcome distribution for one setting.
struct Marginal {
    Party party;
    int setting = 0;
    std::vector<double> probs;
    // Present when every summed entry carried an exact rational.
    std::optional<std::vector<Rational>> exact;
};

enum class ValidationLevel { basic, no_signaling };

struct Violation {
    enum class Kind { range, normalization, no_signaling };
    Kind kind;
    // Indices involved; -1 where not applicable.
    int x = -1, y = -1, a = -1, b = -1;
    double magnitude = 0.0;
    std::string detail;
};

struct ValidationReport {
    ValidationLevel level = ValidationLevel::basic;
    bool complete = false;
    std::vector<Violation> violations;
    Tolerances tolerances;

    bool ok() const { return violations.empty(); }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

// Diagnostics are data, not failures: a partial table is not a violation,
// and checks that need absent entries are skipped.
ValidationReport validate(const BehaviorTable& table, ValidationLevel level,
                          const Tolerances& tol = {});

// Full outcome distribution p(.|x), summing over b at the chosen y.
// Throws MissingEntries when any needed entry is absent. For no-signaling
// tables the choice of y is immaterial.
Marginal marginal_a(const BehaviorTable& table, int x, int sum_y = 0);
Marginal marginal_b(const BehaviorTable& table, int y, int sum_x = 0);

// Single-outcome marginal p(a|x) (resp. p(b|y)); nullopt when the row or
// column it sums over is not fully present. This is the form the partial
// table bounds consume.
std::optional<ProbValue> outcome_prob_a(const BehaviorTable& table, int x, int a, int sum_y);
std::optional<ProbValue> outcome_prob_b(const BehaviorTable& table, int y, int b, int sum_x);

// q(ba|yx) = p(ab|xy); an involution, preserves exactness and verdicts.
BehaviorTable swap_parties(const BehaviorTable& table);

} // namespace bellcert

#endif
