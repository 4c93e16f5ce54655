#include "bellcert/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <utility>

namespace bellcert::sim {

namespace {

using nlohmann::json;

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Hermitian square root, eigenvalues clipped at zero first.
Matrix psd_sqrt(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
    return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
}

void check_spec_shape(const ExperimentSpec& spec) {
    if (spec.povms_a.empty() || spec.povms_b.empty())
        throw DimensionMismatch("experiment needs at least one measurement setting per party");
    const int da = spec.dim_a();
    const int db = spec.dim_b();
    const int na = spec.povms_a.front().outcomes();
    const int nb = spec.povms_b.front().outcomes();
    for (const auto& m : spec.povms_a) {
        if (m.dim() != da)
            throw DimensionMismatch("Alice effect dimension does not match the state");
        if (m.outcomes() != na)
            throw DimensionMismatch("Alice's settings disagree on outcome count");
    }
    for (const auto& n : spec.povms_b) {
        if (n.dim() != db)
            throw DimensionMismatch("Bob effect dimension does not match the state");
        if (n.outcomes() != nb)
            throw DimensionMismatch("Bob's settings disagree on outcome count");
    }
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& doc, const std::string& where) {
    if (!doc.is_array() || doc.empty())
        throw ParseError(where + ": expected a non-empty array of rows");
    if (!doc[0].is_array() || doc[0].empty())
        throw ParseError(where + ": rows must be non-empty arrays");
    const std::size_t cols = doc[0].size();
    Matrix m(static_cast<Eigen::Index>(doc.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& row = doc[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError(where + ": rows must be equal-length arrays");
        for (std::size_t j = 0; j < cols; ++j) {
            const json& e = row[j];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseError(where + ": entries must be [re, im] number pairs");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                Cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

std::vector<Povm> povms_from_json(const json& doc, const std::string& where) {
    if (!doc.is_array() || doc.empty())
        throw ParseError(where + ": expected a non-empty array of settings");
    std::vector<Povm> out;
    out.reserve(doc.size());
    for (std::size_t x = 0; x < doc.size(); ++x) {
        const std::string label = where + "[" + std::to_string(x) + "]";
        const json& setting = doc[x];
        if (!setting.is_array() || setting.empty())
            throw ParseError(label + ": expected a non-empty array of effect matrices");
        std::vector<Matrix> effects;
        effects.reserve(setting.size());
        for (std::size_t a = 0; a < setting.size(); ++a)
            effects.push_back(
                matrix_from_json(setting[a], label + "[" + std::to_string(a) + "]"));
        out.emplace_back(std::move(effects));
    }
    return out;
}

// Seeded Gaussian source. mt19937_64 has a standardized output sequence and
// the uniform-to-normal conversion below is spelled out by hand, so a seed
// pins the generated experiment on every platform (std::normal_distribution
// would not: its algorithm is implementation-defined).
class Gaussian {
  public:
    explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

    double uniform() { // [0, 1), 53-bit resolution
        return static_cast<double>(rng_() >> 11) * 0x1p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    Cplx complex_normal() { // unit total variance
        const double re = normal();
        const double im = normal();
        return Cplx(re, im) * std::numbers::sqrt2 / 2.0;
    }

    Matrix ginibre(int rows, int cols) {
        Matrix g(rows, cols);
        for (int j = 0; j < cols; ++j) // fixed fill order, part of the seed contract
            for (int i = 0; i < rows; ++i)
                g(i, j) = complex_normal();
        return g;
    }

  private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

Povm random_povm(Gaussian& g, int d, int n_eff) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Matrix> wishart;
        wishart.reserve(n_eff);
        Matrix s = Matrix::Zero(d, d);
        for (int a = 0; a < n_eff; ++a) {
            const Matrix w = g.ginibre(d, d);
            wishart.push_back(w * w.adjoint());
            s += wishart.back();
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(s);
        if (es.eigenvalues().minCoeff() < 1e-10)
            continue; // near-singular normalizer: redraw the whole setting
        const Eigen::VectorXd inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
        const Matrix si = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
        std::vector<Matrix> effects;
        effects.reserve(n_eff);
        for (const auto& w : wishart) effects.push_back(si * w * si);
        return Povm(std::move(effects));
    }
    throw InvalidPovm("random POVM generation kept hitting a near-singular normalizer");
}

} // namespace

PureState::PureState(Matrix amplitudes) : amp_(std::move(amplitudes)) {
    if (amp_.rows() < 1 || amp_.cols() < 1)
        throw DimensionMismatch("state amplitude matrix is empty");
    const double n = amp_.norm();
    if (std::abs(n - 1.0) > 1e-12)
        throw NotNormalized("state norm is " + std::to_string(n) + ", expected 1");
}

Eigen::VectorXcd PureState::ket() const {
    Eigen::VectorXcd v(amp_.size());
    for (Eigen::Index i = 0; i < amp_.rows(); ++i)
        for (Eigen::Index j = 0; j < amp_.cols(); ++j)
            v(i * amp_.cols() + j) = amp_(i, j);
    return v;
}

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> coefficients) : lam_(std::move(coefficients)) {
    if (lam_.empty()) throw NotNormalized("coefficient spectrum is empty");
    double sum = 0.0;
    for (double& l : lam_) {
        if (l < -1e-12)
            throw NotNormalized("negative coefficient " + std::to_string(l) + " in spectrum");
        l = std::max(l, 0.0);
        sum += l;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw NotNormalized("coefficients sum to " + std::to_string(sum) + ", expected 1");
    std::sort(lam_.begin(), lam_.end(), std::greater<>());
}

double SchmidtSpectrum::sum_squares() const {
    double s = 0.0;
    for (double l : lam_) s += l * l;
    return s;
}

double SchmidtSpectrum::min_coefficient() const { return lam_.back(); }

double SchmidtSpectrum::min_nonzero(double tol) const {
    for (auto it = lam_.rbegin(); it != lam_.rend(); ++it)
        if (*it > tol) return *it;
    return lam_.front();
}

int SchmidtSpectrum::rank(double tol) const {
    int r = 0;
    for (double l : lam_)
        if (l > tol) ++r;
    return r;
}

Matrix SchmidtSpectrum::half_power_diag() const {
    Matrix d = Matrix::Zero(size(), size());
    for (int i = 0; i < size(); ++i) d(i, i) = std::sqrt(lam_[i]);
    return d;
}

Povm::Povm(std::vector<Matrix> effects) : effects_(std::move(effects)) {
    if (effects_.empty()) throw InvalidPovm("a measurement needs at least one effect");
    const Eigen::Index d = effects_.front().rows();
    if (d < 1) throw InvalidPovm("effect matrices are empty");
    for (auto& e : effects_) {
        if (e.rows() != d || e.cols() != d)
            throw InvalidPovm("effects must be square matrices of one common dimension");
        Matrix herm = 0.5 * (e + e.adjoint());
        if ((e - herm).norm() > 1e-10)
            throw InvalidPovm("effect deviates from Hermitian beyond 1e-10");
        e = std::move(herm);
        Eigen::SelfAdjointEigenSolver<Matrix> es(e, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10)
            throw InvalidPovm("effect has a negative eigenvalue beyond 1e-10");
    }
    Matrix sum = Matrix::Zero(d, d);
    for (const auto& e : effects_) sum += e;
    if ((sum - Matrix::Identity(d, d)).norm() > 1e-10)
        throw InvalidPovm("effects do not sum to the identity within 1e-10");
}

MixedState::MixedState(Matrix rho, int dim_a, int dim_b)
    : rho_(std::move(rho)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a_ < 1 || dim_b_ < 1) throw DimensionMismatch("state dimensions must be positive");
    const Eigen::Index n = static_cast<Eigen::Index>(dim_a_) * dim_b_;
    if (rho_.rows() != n || rho_.cols() != n)
        throw DimensionMismatch("density matrix size does not equal dim_a * dim_b");
    Matrix herm = 0.5 * (rho_ + rho_.adjoint());
    if ((rho_ - herm).norm() > 1e-10)
        throw NotNormalized("density matrix deviates from Hermitian beyond 1e-10");
    rho_ = std::move(herm);
    if (std::abs(rho_.trace().real() - 1.0) > 1e-10)
        throw NotNormalized("density matrix trace is " + std::to_string(rho_.trace().real()) +
                            ", expected 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw NotNormalized("density matrix has a negative eigenvalue beyond 1e-10");
}

int ExperimentSpec::dim_a() const {
    return std::visit([](const auto& s) { return s.dim_a(); }, state);
}

int ExperimentSpec::dim_b() const {
    return std::visit([](const auto& s) { return s.dim_b(); }, state);
}

ExperimentSpec ExperimentSpec::from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("experiment: expected a JSON object");
    for (const char* field : {"state", "povms_a", "povms_b"})
        if (!doc.contains(field))
            throw ParseError(std::string("experiment: missing field '") + field + "'");
    const json& st = doc["state"];
    if (!st.is_object() || !st.contains("kind") || !st["kind"].is_string())
        throw ParseError("state: missing string field 'kind'");
    if (!st.contains("matrix")) throw ParseError("state: missing field 'matrix'");
    Matrix m = matrix_from_json(st["matrix"], "state.matrix");
    auto povms_a = povms_from_json(doc["povms_a"], "povms_a");
    auto povms_b = povms_from_json(doc["povms_b"], "povms_b");
    const std::string kind = st["kind"].get<std::string>();
    if (kind == "pure")
        return ExperimentSpec{PureState(std::move(m)), std::move(povms_a), std::move(povms_b)};
    if (kind == "mixed") {
        if (!st.contains("dim_a") || !st.contains("dim_b") ||
            !st["dim_a"].is_number_integer() || !st["dim_b"].is_number_integer())
            throw ParseError("state: kind \"mixed\" needs integer fields 'dim_a' and 'dim_b'");
        return ExperimentSpec{
            MixedState(std::move(m), st["dim_a"].get<int>(), st["dim_b"].get<int>()),
            std::move(povms_a), std::move(povms_b)};
    }
    throw ParseError("state.kind: expected \"pure\" or \"mixed\", got \"" + kind + "\"");
}

json ExperimentSpec::to_json() const {
    json st;
    if (mixed()) {
        const auto& s = std::get<MixedState>(state);
        st = json{{"kind", "mixed"},
                  {"matrix", matrix_to_json(s.rho())},
                  {"dim_a", s.dim_a()},
                  {"dim_b", s.dim_b()}};
    } else {
        const auto& s = std::get<PureState>(state);
        st = json{{"kind", "pure"}, {"matrix", matrix_to_json(s.amplitudes())}};
    }
    json pa = json::array();
    for (const auto& m : povms_a) {
        json setting = json::array();
        for (int a = 0; a < m.outcomes(); ++a) setting.push_back(matrix_to_json(m.effect(a)));
        pa.push_back(std::move(setting));
    }
    json pb = json::array();
    for (const auto& n : povms_b) {
        json setting = json::array();
        for (int b = 0; b < n.outcomes(); ++b) setting.push_back(matrix_to_json(n.effect(b)));
        pb.push_back(std::move(setting));
    }
    return json{{"state", std::move(st)}, {"povms_a", std::move(pa)}, {"povms_b", std::move(pb)}};
}

SchmidtSpectrum schmidt(const PureState& state) {
    const Eigen::JacobiSVD<Matrix> svd(state.amplitudes());
    std::vector<double> lam(static_cast<std::size_t>(svd.singularValues().size()));
    for (std::size_t i = 0; i < lam.size(); ++i) {
        const double s = svd.singularValues()(static_cast<Eigen::Index>(i));
        lam[i] = s * s;
    }
    return SchmidtSpectrum(std::move(lam));
}

SchmidtFrame schmidt_frame(const PureState& state) {
    Eigen::JacobiSVD<Matrix> svd(state.amplitudes(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    std::vector<double> lam(static_cast<std::size_t>(svd.singularValues().size()));
    for (std::size_t i = 0; i < lam.size(); ++i) {
        const double s = svd.singularValues()(static_cast<Eigen::Index>(i));
        lam[i] = s * s;
    }
    return SchmidtFrame{svd.matrixU(), svd.matrixV(), SchmidtSpectrum(std::move(lam))};
}

BehaviorTable simulate(const ExperimentSpec& spec) {
    check_spec_shape(spec);
    const int nx = static_cast<int>(spec.povms_a.size());
    const int ny = static_cast<int>(spec.povms_b.size());
    const int na = spec.povms_a.front().outcomes();
    const int nb = spec.povms_b.front().outcomes();
    TableBuilder builder(nx, ny, na, nb);
    if (spec.mixed()) {
        const auto& st = std::get<MixedState>(spec.state);
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < ny; ++y)
                for (int a = 0; a < na; ++a)
                    for (int b = 0; b < nb; ++b) {
                        const Matrix joint =
                            kron(spec.povms_a[x].effect(a), spec.povms_b[y].effect(b));
                        builder.set(x, y, a, b, std::real((st.rho() * joint).trace()));
                    }
    } else {
        const auto& st = std::get<PureState>(spec.state);
        const Eigen::VectorXcd psi = st.ket();
        for (int x = 0; x < nx; ++x)
            for (int y = 0; y < ny; ++y)
                for (int a = 0; a < na; ++a)
                    for (int b = 0; b < nb; ++b) {
                        const Matrix joint =
                            kron(spec.povms_a[x].effect(a), spec.povms_b[y].effect(b));
                        builder.set(x, y, a, b, std::real((psi.adjoint() * joint * psi).value()));
                    }
    }
    return builder.build();
}

BehaviorTable simulate_trace_formula(const ExperimentSpec& spec) {
    if (spec.mixed())
        throw DimensionMismatch("the diagonal-basis trace route applies to pure states only");
    check_spec_shape(spec);
    const auto& st = std::get<PureState>(spec.state);
    const SchmidtFrame frame = schmidt_frame(st);
    const int da = st.dim_a();
    const int db = st.dim_b();
    const int r = frame.spectrum.size();
    Matrix rect = Matrix::Zero(da, db); // the amplitude matrix in its own diagonal bases
    for (int i = 0; i < r; ++i) rect(i, i) = std::sqrt(frame.spectrum.coefficients()[i]);

    const int nx = static_cast<int>(spec.povms_a.size());
    const int ny = static_cast<int>(spec.povms_b.size());
    const int na = spec.povms_a.front().outcomes();
    const int nb = spec.povms_b.front().outcomes();
    std::vector<std::vector<Matrix>> ma(nx), mb(ny);
    for (int x = 0; x < nx; ++x)
        for (int a = 0; a < na; ++a)
            ma[x].push_back(frame.rotate_alice(spec.povms_a[x].effect(a)));
    for (int y = 0; y < ny; ++y)
        for (int b = 0; b < nb; ++b)
            mb[y].push_back(frame.rotate_bob(spec.povms_b[y].effect(b)));

    TableBuilder builder(nx, ny, na, nb);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            for (int a = 0; a < na; ++a)
                for (int b = 0; b < nb; ++b) {
                    const double p = std::real(
                        (rect.adjoint() * ma[x][a] * rect * mb[y][b].conjugate()).trace());
                    builder.set(x, y, a, b, p);
                }
    return builder.build();
}

Matrix rho_yb(const SchmidtSpectrum& spectrum, const Matrix& effect, double p_b) {
    if (p_b <= Tolerances{}.zero)
        throw ZeroMarginal("conditional state undefined: outcome probability " +
                           std::to_string(p_b) + " is at or below 1e-12");
    const int r = spectrum.size();
    if (effect.rows() < r || effect.cols() < r)
        throw DimensionMismatch("effect is smaller than the state's support");
    const Matrix d = spectrum.half_power_diag();
    return (d * effect.topLeftCorner(r, r).conjugate() * d) / p_b;
}

double fidelity(const Matrix& rho, const Matrix& sigma) {
    if (rho.rows() != rho.cols() || sigma.rows() != sigma.cols() || rho.rows() != sigma.rows())
        throw DimensionMismatch("fidelity needs two square matrices of one dimension");
    const Matrix prod = psd_sqrt(rho) * psd_sqrt(sigma);
    const Eigen::JacobiSVD<Matrix> svd(prod);
    return std::clamp(svd.singularValues().sum(), 0.0, 1.0);
}

double trace_overlap(const Matrix& rho, const Matrix& sigma) {
    if (rho.rows() != rho.cols() || sigma.rows() != sigma.cols() || rho.rows() != sigma.rows())
        throw DimensionMismatch("trace overlap needs two square matrices of one dimension");
    return std::real((rho * sigma).trace());
}

double renyi_entropy_bits(const std::vector<double>& spectrum, double n) {
    if (n <= 0.0) throw InvalidOrder("entropy order must be positive");
    if (n == 1.0)
        throw InvalidOrder("order 1 is the von Neumann limit; call von_neumann_entropy_bits");
    double s = 0.0;
    for (double p : spectrum)
        if (p > 0.0) s += std::pow(p, n);
    return std::log2(s) / (1.0 - n);
}

double von_neumann_entropy_bits(const std::vector<double>& spectrum) {
    double s = 0.0;
    for (double p : spectrum)
        if (p > 0.0) s -= p * std::log2(p);
    return s;
}

Entropies entropies(const std::vector<double>& spectrum, double n) {
    return Entropies{renyi_entropy_bits(spectrum, n), von_neumann_entropy_bits(spectrum)};
}

Entropies entropies(const Matrix& rho, double n) { return entropies(state_spectrum(rho), n); }

std::vector<double> state_spectrum(const Matrix& rho) {
    if (rho.rows() != rho.cols()) throw DimensionMismatch("spectrum needs a square matrix");
    const Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    const Eigen::Index d = es.eigenvalues().size();
    std::vector<double> out(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) // Eigen sorts ascending; emit descending
        out[static_cast<std::size_t>(i)] = std::max(0.0, es.eigenvalues()(d - 1 - i));
    return out;
}

Matrix partial_trace_b(const Matrix& rho, int dim_a, int dim_b) {
    if (rho.rows() != rho.cols() ||
        rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b)
        throw DimensionMismatch("partial trace: matrix is not (dim_a*dim_b)-square");
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
        for (int k = 0; k < dim_a; ++k)
            for (int j = 0; j < dim_b; ++j)
                out(i, k) += rho(i * dim_b + j, k * dim_b + j);
    return out;
}

Matrix partial_trace_a(const Matrix& rho, int dim_a, int dim_b) {
    if (rho.rows() != rho.cols() ||
        rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b)
        throw DimensionMismatch("partial trace: matrix is not (dim_a*dim_b)-square");
    Matrix out = Matrix::Zero(dim_b, dim_b);
    for (int j = 0; j < dim_b; ++j)
        for (int l = 0; l < dim_b; ++l)
            for (int i = 0; i < dim_a; ++i)
                out(j, l) += rho(i * dim_b + j, i * dim_b + l);
    return out;
}

double purity(const Matrix& rho) { return std::real((rho * rho).trace()); }

PureState purify(const MixedState& state) {
    const int da = state.dim_a();
    const int db = state.dim_b();
    const int n = da * db; // environment levels, one per eigenvector
    const Eigen::SelfAdjointEigenSolver<Matrix> es(state.rho());
    Matrix amp = Matrix::Zero(da, static_cast<Eigen::Index>(db) * n);
    for (int k = 0; k < n; ++k) {
        const double mu = std::max(0.0, es.eigenvalues()(k));
        if (mu == 0.0) continue;
        const double w = std::sqrt(mu);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j)
                amp(i, static_cast<Eigen::Index>(j) * n + k) =
                    w * es.eigenvectors()(i * db + j, k);
    }
    amp /= amp.norm();
    return PureState(std::move(amp));
}

ExperimentSpec random_instance(int d, int n_x, int n_y, int n_a, int n_b, std::uint64_t seed) {
    if (d < 1 || n_x < 1 || n_y < 1 || n_a < 1 || n_b < 1)
        throw std::invalid_argument("random experiment: every size must be at least 1");
    Gaussian g(seed);
    Matrix c = g.ginibre(d, d);
    c /= c.norm();
    ExperimentSpec spec{PureState(std::move(c)), {}, {}};
    for (int x = 0; x < n_x; ++x) spec.povms_a.push_back(random_povm(g, d, n_a));
    for (int y = 0; y < n_y; ++y) spec.povms_b.push_back(random_povm(g, d, n_b));
    return spec;
}

ExperimentSpec random_mixed_instance(int d, int n_x, int n_y, int n_a, int n_b,
                                     std::uint64_t seed) {
    if (d < 1 || n_x < 1 || n_y < 1 || n_a < 1 || n_b < 1)
        throw std::invalid_argument("random experiment: every size must be at least 1");
    Gaussian g(seed);
    const Matrix w = g.ginibre(d * d, d * d); // full rank with probability 1
    Matrix rho = w * w.adjoint();
    rho /= rho.trace().real();
    ExperimentSpec spec{MixedState(std::move(rho), d, d), {}, {}};
    for (int x = 0; x < n_x; ++x) spec.povms_a.push_back(random_povm(g, d, n_a));
    for (int y = 0; y < n_y; ++y) spec.povms_b.push_back(random_povm(g, d, n_b));
    return spec;
}

} // namespace bellcert::sim
