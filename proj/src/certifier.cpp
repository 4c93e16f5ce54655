#include "bellcert/certifier.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace bellcert {

namespace {

void require_complete(const BehaviorTable& table, const char* op) {
    if (!table.complete())
        throw PartialTable(std::string(op) + " requires a complete table (" +
                           std::to_string(table.present_count()) + " of " +
                           std::to_string(static_cast<std::size_t>(table.n_x()) * table.n_y() *
                                          table.n_a() * table.n_b()) +
                           " entries present)");
}

} // namespace

double f1(const BehaviorTable& table) {
    require_complete(table, "f1");
    double best = std::numeric_limits<double>::infinity();
    for (int y1 = 0; y1 < table.n_y(); ++y1)
        for (int y2 = 0; y2 < table.n_y(); ++y2) {
            double total = 0.0;
            for (int b1 = 0; b1 < table.n_b(); ++b1)
                for (int b2 = 0; b2 < table.n_b(); ++b2) {
                    double inner_min = std::numeric_limits<double>::infinity();
                    for (int x = 0; x < table.n_x(); ++x) {
                        double s = 0.0;
                        for (int a = 0; a < table.n_a(); ++a)
                            s += std::sqrt(table.prob(x, y1, a, b1) * table.prob(x, y2, a, b2));
                        inner_min = std::min(inner_min, s);
                    }
                    total += inner_min * inner_min;
                }
            best = std::min(best, total);
        }
    return best;
}

double f2(const BehaviorTable& table) {
    require_complete(table, "f2");
    double best = std::numeric_limits<double>::infinity();
    for (int x1 = 0; x1 < table.n_x(); ++x1)
        for (int x2 = 0; x2 < table.n_x(); ++x2) {
            double total = 0.0;
            for (int a1 = 0; a1 < table.n_a(); ++a1)
                for (int a2 = 0; a2 < table.n_a(); ++a2) {
                    double inner_min = std::numeric_limits<double>::infinity();
                    for (int y = 0; y < table.n_y(); ++y) {
                        double s = 0.0;
                        for (int b = 0; b < table.n_b(); ++b)
                            s += std::sqrt(table.prob(x1, y, a1, b) * table.prob(x2, y, a2, b));
                        inner_min = std::min(inner_min, s);
                    }
                    total += inner_min * inner_min;
                }
            best = std::min(best, total);
        }
    return best;
}

double purity_bound(const BehaviorTable& table) {
    return std::min(f1(table), f2(table));
}

DimBound dim_lower_bound(const BehaviorTable& table, const Tolerances& tol) {
    const double pb = purity_bound(table);
    if (pb <= tol.zero)
        return DimBound{false, 0};
    const int d = static_cast<int>(std::ceil(1.0 / pb - tol.ceil_slack));
    return DimBound{true, std::max(1, d)};
}

double entropy_lower_bound_bits(const BehaviorTable& table, const Tolerances& tol) {
    const double pb = purity_bound(table);
    if (pb <= tol.zero)
        throw InfiniteBound("entropy lower bound is infinite: purity bound is zero");
    return std::max(0.0, -std::log2(pb));
}

LambdaMinBound lambda_min_bound(const BehaviorTable& table, double epsilon_p) {
    bool any = false;
    bool all_exact = true;
    double best = std::numeric_limits<double>::infinity();
    std::optional<Rational> best_exact;

    for (int x = 0; x < table.n_x(); ++x)
        for (int y = 0; y < table.n_y(); ++y)
            for (int a = 0; a < table.n_a(); ++a)
                for (int b = 0; b < table.n_b(); ++b) {
                    const auto& joint = table.at(x, y, a, b);
                    if (!joint || joint->value <= epsilon_p)
                        continue;
                    const auto pa = outcome_prob_a(table, x, a, y);
                    const auto pb = outcome_prob_b(table, y, b, x);
                    if (!pa || !pb)
                        continue;
                    any = true;

                    std::optional<Rational> exact_ratio;
                    if (joint->exact && pa->exact && pb->exact) {
                        try {
                            Rational r = (*pa->exact * *pb->exact) / *joint->exact;
                            if (Rational(1, 1) < r)
                                r = Rational(1, 1); // clamp
                            exact_ratio = r;
                        } catch (const std::overflow_error&) {
                        }
                    }
                    if (exact_ratio) {
                        if (!best_exact || *exact_ratio < *best_exact)
                            best_exact = exact_ratio;
                    } else {
                        all_exact = false;
                    }
                    const double ratio =
                        exact_ratio ? exact_ratio->to_double()
                                    : std::min(1.0, pa->value * pb->value / joint->value);
                    best = std::min(best, ratio);
                }

    LambdaMinBound out;
    if (!any) {
        out.vacuous = true;
        return out;
    }
    if (all_exact && best_exact) {
        out.exact = best_exact;
        out.value = best_exact->to_double();
    } else {
        out.value = std::min(1.0, std::max(0.0, best));
    }
    return out;
}

ExclusionInterval exclude_two_qubit_range(const BehaviorTable& table, double epsilon_p) {
    const auto bound = lambda_min_bound(table, epsilon_p);
    ExclusionInterval out;
    if (bound.vacuous)
        return out;
    if (bound.exact) {
        const Rational half(1, 2);
        if (*bound.exact >= half)
            return out;
        out.empty = false;
        out.lo_exact = bound.exact;
        out.hi_exact = Rational(1, 1) - *bound.exact;
        out.lo = out.lo_exact->to_double();
        out.hi = out.hi_exact->to_double();
        return out;
    }
    if (bound.value >= 0.5)
        return out;
    out.empty = false;
    out.lo = bound.value;
    out.hi = 1.0 - bound.value;
    return out;
}

bool exclude_maximally_entangled(const BehaviorTable& table, int d, double epsilon_p,
                                 const Tolerances& tol) {
    if (d < 1)
        throw std::invalid_argument("exclude_maximally_entangled: d must be >= 1");
    const auto bound = lambda_min_bound(table, epsilon_p);
    if (bound.vacuous)
        return false;
    if (bound.exact)
        return *bound.exact < Rational(1, d);
    return bound.value < 1.0 / d - tol.zero;
}

double ef_lower_bound(const BehaviorTable& table, double eta, int d, const Tolerances& tol) {
    if (!(eta > 0.0 && eta < 0.5))
        throw EtaOutOfRange("eta must lie in (0, 1/2), got " + std::to_string(eta));
    if (d < 1)
        throw std::invalid_argument("ef_lower_bound: dimension cap d must be >= 1");
    const double pb = purity_bound(table);
    if (pb <= tol.zero)
        return std::numeric_limits<double>::infinity();
    const double a1_low = 0.5 + std::sqrt(0.5 * (0.5 - eta));
    const double transferred_purity = pb / (a1_low * a1_low);
    const double entropy_term = -std::log2(transferred_purity);
    const double continuity = std::sqrt(2.0 * eta) * (9.0 * std::log2(double(d)) - std::log2(2.0 * eta));
    return std::max(0.0, entropy_term - continuity);
}

BoundsReport certify(const BehaviorTable& table, const CertifyOptions& options) {
    BoundsReport report;
    report.epsilon_p = options.epsilon_p;
    report.tolerances = options.tolerances;
    report.partial_input = !table.complete();

    if (!report.partial_input) {
        report.f1 = f1(table);
        report.f2 = f2(table);
        report.purity_bound = std::min(*report.f1, *report.f2);
        report.dim_lower_bound = dim_lower_bound(table, options.tolerances);
        if (*report.purity_bound <= options.tolerances.zero)
            report.entropy_bits = std::numeric_limits<double>::infinity();
        else
            report.entropy_bits = std::max(0.0, -std::log2(*report.purity_bound));
        if (options.eta && options.ef_dim) {
            report.ef_bits = ef_lower_bound(table, *options.eta, *options.ef_dim,
                                            options.tolerances);
            report.ef_eta = options.eta;
            report.ef_dim = options.ef_dim;
        }
    }
    report.lambda_min = lambda_min_bound(table, options.epsilon_p);
    return report;
}

// ---------------------------------------------------------------------------
// Report serialization

namespace {

nlohmann::json finite_or_inf(double v) {
    if (std::isinf(v))
        return "inf";
    return v;
}

std::string sig6(double v) {
    if (std::isinf(v))
        return "inf";
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

} // namespace

nlohmann::json BoundsReport::to_json() const {
    nlohmann::json doc;
    doc["partial_input"] = partial_input;
    doc["f1"] = f1 ? nlohmann::json(*f1) : nlohmann::json(nullptr);
    doc["f2"] = f2 ? nlohmann::json(*f2) : nlohmann::json(nullptr);
    doc["purity_bound"] = purity_bound ? nlohmann::json(*purity_bound) : nlohmann::json(nullptr);
    if (!dim_lower_bound)
        doc["dim_lower_bound"] = nullptr;
    else if (!dim_lower_bound->finite)
        doc["dim_lower_bound"] = "no_finite_dim";
    else
        doc["dim_lower_bound"] = dim_lower_bound->value;
    doc["entropy_lower_bound_bits"] =
        entropy_bits ? finite_or_inf(*entropy_bits) : nlohmann::json(nullptr);
    if (lambda_min.vacuous) {
        doc["lambda_min_bound"] = "vacuous";
    } else {
        doc["lambda_min_bound"] = lambda_min.value;
        if (lambda_min.exact)
            doc["lambda_min_bound_exact"] = lambda_min.exact->str();
    }
    if (ef_bits) {
        doc["ef_lower_bound_bits"] = finite_or_inf(*ef_bits);
        doc["ef_eta"] = *ef_eta;
        doc["ef_dim"] = *ef_dim;
    }
    doc["tolerances"] = {{"epsilon_p", epsilon_p},
                         {"tol_norm", tolerances.norm},
                         {"tol_ns", tolerances.no_signaling},
                         {"tol_zero", tolerances.zero},
                         {"tol_ceil", tolerances.ceil_slack}};
    return doc;
}

std::string BoundsReport::to_text() const {
    std::ostringstream os;
    if (partial_input)
        os << "input is partial: purity-derived bounds skipped\n";
    auto line = [&os](const char* name, const std::string& value) {
        os << std::left << std::setw(26) << name << value << "\n";
    };
    if (f1)
        line("f1", sig6(*f1));
    if (f2)
        line("f2", sig6(*f2));
    if (purity_bound)
        line("purity_bound", sig6(*purity_bound));
    if (dim_lower_bound)
        line("dim_lower_bound",
             dim_lower_bound->finite ? std::to_string(dim_lower_bound->value)
                                     : std::string("no_finite_dim"));
    if (entropy_bits)
        line("entropy_lower_bound", sig6(*entropy_bits) + " bits");
    if (lambda_min.vacuous) {
        line("lambda_min_bound", "vacuous");
    } else {
        std::string v = sig6(lambda_min.value);
        if (lambda_min.exact)
            v += " (= " + lambda_min.exact->str() + ")";
        line("lambda_min_bound", v);
    }
    if (ef_bits) {
        std::ostringstream q;
        q << sig6(*ef_bits) << " bits (eta=" << *ef_eta << ", d=" << *ef_dim << ")";
        line("ef_lower_bound", q.str());
    }
    os << "tolerances: epsilon_p=" << epsilon_p << " tol_norm=" << tolerances.norm
       << " tol_ns=" << tolerances.no_signaling << " tol_zero=" << tolerances.zero
       << " tol_ceil=" << tolerances.ceil_slack << "\n";
    return os.str();
}

} // namespace bellcert
