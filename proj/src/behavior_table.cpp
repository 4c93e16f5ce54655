#include "bellcert/behavior_table.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace bellcert {

namespace {

void check_dims(int n_x, int n_y, int n_a, int n_b) {
    if (n_x < 1 || n_y < 1 || n_a < 1 || n_b < 1)
        throw std::invalid_argument("BehaviorTable: all cardinalities must be >= 1");
}

std::string tuple_str(int x, int y, int a, int b) {
    std::ostringstream os;
    os << "(x=" << x << ", y=" << y << ", a=" << a << ", b=" << b << ")";
    return os.str();
}

} // namespace

BehaviorTable::BehaviorTable(int n_x, int n_y, int n_a, int n_b,
                             std::vector<std::optional<ProbValue>> entries)
    : n_x_(n_x), n_y_(n_y), n_a_(n_a), n_b_(n_b), entries_(std::move(entries)) {
    check_dims(n_x, n_y, n_a, n_b);
    const std::size_t want = static_cast<std::size_t>(n_x_) * n_y_ * n_a_ * n_b_;
    if (entries_.size() != want)
        throw std::invalid_argument("BehaviorTable: entry vector size does not match dimensions");
}

std::size_t BehaviorTable::index(int x, int y, int a, int b) const {
    if (x < 0 || x >= n_x_ || y < 0 || y >= n_y_ || a < 0 || a >= n_a_ || b < 0 || b >= n_b_)
        throw std::out_of_range("BehaviorTable: index " + tuple_str(x, y, a, b) + " out of range");
    return ((static_cast<std::size_t>(x) * n_y_ + y) * n_a_ + a) * n_b_ + b;
}

const std::optional<ProbValue>& BehaviorTable::at(int x, int y, int a, int b) const {
    return entries_[index(x, y, a, b)];
}

double BehaviorTable::prob(int x, int y, int a, int b) const {
    const auto& e = at(x, y, a, b);
    if (!e)
        throw MissingEntries("entry " + tuple_str(x, y, a, b) + " is unspecified");
    return e->value;
}

bool BehaviorTable::complete() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return e.has_value(); });
}

std::size_t BehaviorTable::present_count() const {
    return static_cast<std::size_t>(std::count_if(
        entries_.begin(), entries_.end(), [](const auto& e) { return e.has_value(); }));
}

bool BehaviorTable::all_exact() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return !e || e->exact.has_value(); });
}

// ---------------------------------------------------------------------------
// TableBuilder

TableBuilder::TableBuilder(int n_x, int n_y, int n_a, int n_b, double clamp)
    : n_x_(n_x), n_y_(n_y), n_a_(n_a), n_b_(n_b), clamp_(clamp),
      entries_(static_cast<std::size_t>(n_x) * n_y * n_a * n_b) {
    check_dims(n_x, n_y, n_a, n_b);
}

TableBuilder& TableBuilder::set(int x, int y, int a, int b, double p) {
    if (p < 0.0 && p >= -clamp_)
        p = 0.0;
    else if (p > 1.0 && p <= 1.0 + clamp_)
        p = 1.0;
    const std::size_t i = ((static_cast<std::size_t>(x) * n_y_ + y) * n_a_ + a) * n_b_ + b;
    entries_.at(i) = ProbValue{p, std::nullopt};
    return *this;
}

TableBuilder& TableBuilder::set(int x, int y, int a, int b, const Rational& p) {
    const std::size_t i = ((static_cast<std::size_t>(x) * n_y_ + y) * n_a_ + a) * n_b_ + b;
    entries_.at(i) = ProbValue{p.to_double(), p};
    return *this;
}

BehaviorTable TableBuilder::build() const {
    return BehaviorTable(n_x_, n_y_, n_a_, n_b_, entries_);
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const BehaviorTable& table, ValidationLevel level,
                          const Tolerances& tol) {
    ValidationReport report;
    report.level = level;
    report.complete = table.complete();
    report.tolerances = tol;

    for (int x = 0; x < table.n_x(); ++x)
        for (int y = 0; y < table.n_y(); ++y)
            for (int a = 0; a < table.n_a(); ++a)
                for (int b = 0; b < table.n_b(); ++b) {
                    const auto& e = table.at(x, y, a, b);
                    if (!e)
                        continue;
                    if (e->value < 0.0 || e->value > 1.0) {
                        Violation v;
                        v.kind = Violation::Kind::range;
                        v.x = x; v.y = y; v.a = a; v.b = b;
                        v.magnitude = e->value < 0.0 ? -e->value : e->value - 1.0;
                        v.detail = "entry " + tuple_str(x, y, a, b) + " = " +
                                   std::to_string(e->value) + " outside [0,1]";
                        report.violations.push_back(std::move(v));
                    }
                }

    // Normalization, per fully-present (x,y) block.
    for (int x = 0; x < table.n_x(); ++x)
        for (int y = 0; y < table.n_y(); ++y) {
            double sum = 0.0;
            bool block_complete = true;
            for (int a = 0; a < table.n_a() && block_complete; ++a)
                for (int b = 0; b < table.n_b(); ++b) {
                    const auto& e = table.at(x, y, a, b);
                    if (!e) {
                        block_complete = false;
                        break;
                    }
                    sum += e->value;
                }
            if (block_complete && std::abs(sum - 1.0) > tol.norm) {
                Violation v;
                v.kind = Violation::Kind::normalization;
                v.x = x; v.y = y;
                v.magnitude = std::abs(sum - 1.0);
                v.detail = "block (x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                           ") sums to " + std::to_string(sum);
                report.violations.push_back(std::move(v));
            }
        }

    if (level == ValidationLevel::no_signaling) {
        // Alice's marginal p(a|x) must not depend on y, and symmetrically.
        for (int x = 0; x < table.n_x(); ++x)
            for (int a = 0; a < table.n_a(); ++a) {
                std::optional<double> ref;
                int ref_y = -1;
                for (int y = 0; y < table.n_y(); ++y) {
                    const auto p = outcome_prob_a(table, x, a, y);
                    if (!p)
                        continue;
                    if (!ref) {
                        ref = p->value;
                        ref_y = y;
                    } else if (std::abs(p->value - *ref) > tol.no_signaling) {
                        Violation v;
                        v.kind = Violation::Kind::no_signaling;
                        v.x = x; v.a = a; v.y = y;
                        v.magnitude = std::abs(p->value - *ref);
                        v.detail = "p(a=" + std::to_string(a) + "|x=" + std::to_string(x) +
                                   ") differs between y=" + std::to_string(ref_y) +
                                   " and y=" + std::to_string(y);
                        report.violations.push_back(std::move(v));
                    }
                }
            }
        for (int y = 0; y < table.n_y(); ++y)
            for (int b = 0; b < table.n_b(); ++b) {
                std::optional<double> ref;
                int ref_x = -1;
                for (int x = 0; x < table.n_x(); ++x) {
                    const auto p = outcome_prob_b(table, y, b, x);
                    if (!p)
                        continue;
                    if (!ref) {
                        ref = p->value;
                        ref_x = x;
                    } else if (std::abs(p->value - *ref) > tol.no_signaling) {
                        Violation v;
                        v.kind = Violation::Kind::no_signaling;
                        v.y = y; v.b = b; v.x = x;
                        v.magnitude = std::abs(p->value - *ref);
                        v.detail = "p(b=" + std::to_string(b) + "|y=" + std::to_string(y) +
                                   ") differs between x=" + std::to_string(ref_x) +
                                   " and x=" + std::to_string(x);
                        report.violations.push_back(std::move(v));
                    }
                }
            }
    }

    return report;
}

// ---------------------------------------------------------------------------
// Marginals

std::optional<ProbValue> outcome_prob_a(const BehaviorTable& table, int x, int a, int sum_y) {
    double sum = 0.0;
    bool exact_ok = true;
    Rational exact_sum(0, 1);
    for (int b = 0; b < table.n_b(); ++b) {
        const auto& e = table.at(x, sum_y, a, b);
        if (!e)
            return std::nullopt;
        sum += e->value;
        if (exact_ok && e->exact) {
            try {
                exact_sum = exact_sum + *e->exact;
            } catch (const std::overflow_error&) {
                exact_ok = false;
            }
        } else {
            exact_ok = false;
        }
    }
    ProbValue out;
    out.value = exact_ok ? exact_sum.to_double() : sum;
    if (exact_ok)
        out.exact = exact_sum;
    return out;
}

std::optional<ProbValue> outcome_prob_b(const BehaviorTable& table, int y, int b, int sum_x) {
    double sum = 0.0;
    bool exact_ok = true;
    Rational exact_sum(0, 1);
    for (int a = 0; a < table.n_a(); ++a) {
        const auto& e = table.at(sum_x, y, a, b);
        if (!e)
            return std::nullopt;
        sum += e->value;
        if (exact_ok && e->exact) {
            try {
                exact_sum = exact_sum + *e->exact;
            } catch (const std::overflow_error&) {
                exact_ok = false;
            }
        } else {
            exact_ok = false;
        }
    }
    ProbValue out;
    out.value = exact_ok ? exact_sum.to_double() : sum;
    if (exact_ok)
        out.exact = exact_sum;
    return out;
}

Marginal marginal_a(const BehaviorTable& table, int x, int sum_y) {
    Marginal m;
    m.party = Party::alice;
    m.setting = x;
    std::vector<Rational> exact;
    bool exact_ok = true;
    for (int a = 0; a < table.n_a(); ++a) {
        const auto p = outcome_prob_a(table, x, a, sum_y);
        if (!p)
            throw MissingEntries("marginal p(.|x=" + std::to_string(x) + ") needs entries absent at y=" +
                                 std::to_string(sum_y) + ", a=" + std::to_string(a));
        m.probs.push_back(p->value);
        if (p->exact && exact_ok)
            exact.push_back(*p->exact);
        else
            exact_ok = false;
    }
    if (exact_ok)
        m.exact = std::move(exact);
    return m;
}

Marginal marginal_b(const BehaviorTable& table, int y, int sum_x) {
    Marginal m;
    m.party = Party::bob;
    m.setting = y;
    std::vector<Rational> exact;
    bool exact_ok = true;
    for (int b = 0; b < table.n_b(); ++b) {
        const auto p = outcome_prob_b(table, y, b, sum_x);
        if (!p)
            throw MissingEntries("marginal p(.|y=" + std::to_string(y) + ") needs entries absent at x=" +
                                 std::to_string(sum_x) + ", b=" + std::to_string(b));
        m.probs.push_back(p->value);
        if (p->exact && exact_ok)
            exact.push_back(*p->exact);
        else
            exact_ok = false;
    }
    if (exact_ok)
        m.exact = std::move(exact);
    return m;
}

BehaviorTable swap_parties(const BehaviorTable& table) {
    std::vector<std::optional<ProbValue>> entries(
        static_cast<std::size_t>(table.n_x()) * table.n_y() * table.n_a() * table.n_b());
    // New table indexed (y, x, b, a).
    const int qx = table.n_y(), qy = table.n_x(), qa = table.n_b(), qb = table.n_a();
    for (int x = 0; x < qx; ++x)
        for (int y = 0; y < qy; ++y)
            for (int a = 0; a < qa; ++a)
                for (int b = 0; b < qb; ++b) {
                    const std::size_t i =
                        ((static_cast<std::size_t>(x) * qy + y) * qa + a) * qb + b;
                    entries[i] = table.at(y, x, b, a);
                }
    return BehaviorTable(qx, qy, qa, qb, std::move(entries));
}

// ---------------------------------------------------------------------------
// JSON

namespace {

ProbValue parse_prob(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) {
        const auto r = Rational::parse(v.get<std::string>());
        if (!r)
            throw ParseError("field '" + where + "': string entry '" + v.get<std::string>() +
                             "' is not a rational \"num/den\"");
        return ProbValue{r->to_double(), *r};
    }
    if (v.is_number())
        return ProbValue{v.get<double>(), std::nullopt};
    throw ParseError("field '" + where + "': expected number or \"num/den\" string");
}

int require_positive_int(const nlohmann::json& doc, const char* name) {
    if (!doc.contains(name) || !doc[name].is_number_integer())
        throw ParseError(std::string("field '") + name + "' missing or not an integer");
    const int v = doc[name].get<int>();
    if (v < 1)
        throw ParseError(std::string("field '") + name + "' must be >= 1");
    return v;
}

} // namespace

BehaviorTable BehaviorTable::from_json(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw ParseError("table document must be a JSON object");
    const int n_x = require_positive_int(doc, "n_x");
    const int n_y = require_positive_int(doc, "n_y");
    const int n_a = require_positive_int(doc, "n_a");
    const int n_b = require_positive_int(doc, "n_b");
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw ParseError("field 'entries' missing or not an array");
    const auto& entries = doc["entries"];

    TableBuilder builder(n_x, n_y, n_a, n_b);
    // An empty list reads as a sparse list with no records, i.e. a fully
    // unspecified partial table.
    const bool sparse = entries.empty() || entries.front().is_object();

    auto set_one = [&](int x, int y, int a, int b, const ProbValue& p, const std::string& where) {
        if (x < 0 || x >= n_x || y < 0 || y >= n_y || a < 0 || a >= n_a || b < 0 || b >= n_b)
            throw ParseError("field '" + where + "': index " + tuple_str(x, y, a, b) +
                             " out of range");
        if (p.exact)
            builder.set(x, y, a, b, *p.exact);
        else
            builder.set(x, y, a, b, p.value);
    };

    if (sparse) {
        std::size_t i = 0;
        for (const auto& rec : entries) {
            const std::string where = "entries[" + std::to_string(i++) + "]";
            if (!rec.is_object())
                throw ParseError("field '" + where + "': expected {x, y, a, b, p} record");
            for (const char* k : {"x", "y", "a", "b"})
                if (!rec.contains(k) || !rec[k].is_number_integer())
                    throw ParseError("field '" + where + "." + k + "' missing or not an integer");
            if (!rec.contains("p"))
                throw ParseError("field '" + where + ".p' missing");
            set_one(rec["x"].get<int>(), rec["y"].get<int>(), rec["a"].get<int>(),
                    rec["b"].get<int>(), parse_prob(rec["p"], where + ".p"), where);
        }
    } else {
        // Dense [x][y][a][b] with null for unspecified entries.
        if (static_cast<int>(entries.size()) != n_x)
            throw ParseError("field 'entries': expected " + std::to_string(n_x) +
                             " x-slices, got " + std::to_string(entries.size()));
        for (int x = 0; x < n_x; ++x) {
            const auto& ys = entries[x];
            if (!ys.is_array() || static_cast<int>(ys.size()) != n_y)
                throw ParseError("field 'entries[" + std::to_string(x) + "]': expected " +
                                 std::to_string(n_y) + " y-slices");
            for (int y = 0; y < n_y; ++y) {
                const auto& as = ys[y];
                if (!as.is_array() || static_cast<int>(as.size()) != n_a)
                    throw ParseError("field 'entries[" + std::to_string(x) + "][" +
                                     std::to_string(y) + "]': expected " + std::to_string(n_a) +
                                     " a-slices");
                for (int a = 0; a < n_a; ++a) {
                    const auto& bs = as[a];
                    if (!bs.is_array() || static_cast<int>(bs.size()) != n_b)
                        throw ParseError("field 'entries[" + std::to_string(x) + "][" +
                                         std::to_string(y) + "][" + std::to_string(a) +
                                         "]': expected " + std::to_string(n_b) + " values");
                    for (int b = 0; b < n_b; ++b) {
                        const auto& v = bs[b];
                        if (v.is_null())
                            continue;
                        const std::string where = "entries[" + std::to_string(x) + "][" +
                                                  std::to_string(y) + "][" + std::to_string(a) +
                                                  "][" + std::to_string(b) + "]";
                        set_one(x, y, a, b, parse_prob(v, where), where);
                    }
                }
            }
        }
    }
    return builder.build();
}

nlohmann::json BehaviorTable::to_json() const {
    nlohmann::json doc;
    doc["n_x"] = n_x_;
    doc["n_y"] = n_y_;
    doc["n_a"] = n_a_;
    doc["n_b"] = n_b_;
    auto entries = nlohmann::json::array();
    for (int x = 0; x < n_x_; ++x) {
        auto ys = nlohmann::json::array();
        for (int y = 0; y < n_y_; ++y) {
            auto as = nlohmann::json::array();
            for (int a = 0; a < n_a_; ++a) {
                auto bs = nlohmann::json::array();
                for (int b = 0; b < n_b_; ++b) {
                    const auto& e = at(x, y, a, b);
                    if (!e)
                        bs.push_back(nullptr);
                    else if (e->exact)
                        bs.push_back(e->exact->str());
                    else
                        bs.push_back(e->value);
                }
                as.push_back(std::move(bs));
            }
            ys.push_back(std::move(as));
        }
        entries.push_back(std::move(ys));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

nlohmann::json ValidationReport::to_json() const {
    nlohmann::json doc;
    doc["level"] = level == ValidationLevel::basic ? "basic" : "no_signaling";
    doc["complete"] = complete;
    doc["ok"] = ok();
    auto vs = nlohmann::json::array();
    for (const auto& v : violations) {
        nlohmann::json jv;
        switch (v.kind) {
            case Violation::Kind::range: jv["kind"] = "range"; break;
            case Violation::Kind::normalization: jv["kind"] = "normalization"; break;
            case Violation::Kind::no_signaling: jv["kind"] = "no_signaling"; break;
        }
        if (v.x >= 0) jv["x"] = v.x;
        if (v.y >= 0) jv["y"] = v.y;
        if (v.a >= 0) jv["a"] = v.a;
        if (v.b >= 0) jv["b"] = v.b;
        jv["magnitude"] = v.magnitude;
        jv["detail"] = v.detail;
        vs.push_back(std::move(jv));
    }
    doc["violations"] = std::move(vs);
    doc["tolerances"] = {{"tol_norm", tolerances.norm}, {"tol_ns", tolerances.no_signaling}};
    return doc;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    os << "validation level: " << (level == ValidationLevel::basic ? "basic" : "no-signaling")
       << "\n";
    os << "table: " << (complete ? "complete" : "partial") << "\n";
    if (violations.empty()) {
        os << "no violations\n";
    } else {
        os << violations.size() << " violation(s):\n";
        for (const auto& v : violations)
            os << "  - " << v.detail << "\n";
    }
    os << "tolerances: tol_norm=" << tolerances.norm << " tol_ns=" << tolerances.no_signaling
       << "\n";
    return os.str();
}

} // namespace bellcert
