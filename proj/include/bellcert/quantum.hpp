#ifndef BELLCERT_QUANTUM_HPP
#define BELLCERT_QUANTUM_HPP

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "bellcert/behavior_table.hpp"
#include "bellcert/errors.hpp"

namespace bellcert::sim {

using Matrix = Eigen::MatrixXcd;
using Cplx = std::complex<double>;

// Bipartite pure state as its amplitude matrix C (d_A x d_B): the state is
// sum_{ij} C_ij |i>|j>. Frobenius norm must be 1 within 1e-12.
class PureState {
  public:
    explicit PureState(Matrix amplitudes);

    const Matrix& amplitudes() const { return amp_; }
    int dim_a() const { return static_cast<int>(amp_.rows()); }
    int dim_b() const { return static_cast<int>(amp_.cols()); }

    // The state as a flat vector, index i*d_B + j.
    Eigen::VectorXcd ket() const;

  private:
    Matrix amp_;
};

// Squared singular values of the amplitude matrix, descending. They sum to 1
// within 1e-10 and completely capture the state's entanglement.
class SchmidtSpectrum {
  public:
    explicit SchmidtSpectrum(std::vector<double> coefficients);

    const std::vector<double>& coefficients() const { return lam_; }
    int size() const { return static_cast<int>(lam_.size()); }

    double sum_squares() const;         // purity of either reduced state
    double min_coefficient() const;     // smallest entry (may be ~0)
    double min_nonzero(double tol = 1e-12) const;
    int rank(double tol = 1e-12) const; // entries above tol

    // diag(sqrt(lambda_1), ..., sqrt(lambda_d)) as a dense complex matrix.
    Matrix half_power_diag() const;

  private:
    std::vector<double> lam_;
};

// One measurement setting: effects are Hermitian (symmetrized on ingestion,
// deviations beyond 1e-10 rejected), positive semidefinite within 1e-10, and
// sum to the identity within 1e-10.
class Povm {
  public:
    explicit Povm(std::vector<Matrix> effects);

    int outcomes() const { return static_cast<int>(effects_.size()); }
    int dim() const { return static_cast<int>(effects_.front().rows()); }
    const Matrix& effect(int outcome) const { return effects_.at(outcome); }

  private:
    std::vector<Matrix> effects_;
};

// Density matrix on the joint space with its factor dimensions.
class MixedState {
  public:
    MixedState(Matrix rho, int dim_a, int dim_b);

    const Matrix& rho() const { return rho_; }
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }

  private:
    Matrix rho_;
    int dim_a_, dim_b_;
};

// A full experiment: shared state plus one POVM per setting and party.
// All of Alice's settings must share an outcome count, likewise Bob's.
struct ExperimentSpec {
    std::variant<PureState, MixedState> state;
    std::vector<Povm> povms_a;
    std::vector<Povm> povms_b;

    bool mixed() const { return std::holds_alternative<MixedState>(state); }
    int dim_a() const;
    int dim_b() const;

    // JSON: state as {kind: "pure"|"mixed", matrix: [[[re,im],...],...]}
    // (mixed also carries dim_a/dim_b), povms_a/povms_b as arrays of arrays
    // of matrices in the same encoding.
    static ExperimentSpec from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
};

SchmidtSpectrum schmidt(const PureState& state);

// Full decomposition C = U diag(sqrt(lambda)) V^dagger together with the
// local rotations that bring the state to its diagonal form.
struct SchmidtFrame {
    Matrix u, v;
    SchmidtSpectrum spectrum;

    // Effects rewritten in the state's diagonal local bases.
    Matrix rotate_alice(const Matrix& effect) const { return u.adjoint() * effect * u; }
    Matrix rotate_bob(const Matrix& effect) const {
        return v.transpose() * effect * v.conjugate();
    }
};

SchmidtFrame schmidt_frame(const PureState& state);

// p(ab|xy) as the tensor-product expectation <psi| M_xa x N_yb |psi> (pure)
// or Tr(rho . M_xa x N_yb) (mixed). Complete, normalized, and no-signaling
// by construction.
BehaviorTable simulate(const ExperimentSpec& spec);

// Independent evaluation route for pure states: rotate to the diagonal local
// bases and evaluate p(ab|xy) = Tr(M'_xa . D N'^*_yb D). Must agree with
// simulate() entrywise within 1e-10; kept separate so tests can compare the
// two paths. Throws DimensionMismatch for mixed-state specs.
BehaviorTable simulate_trace_formula(const ExperimentSpec& spec);

// The post-measurement reduced state D N^* D / p(b|y) seen by Alice when
// Bob's setting y gave outcome b. `effect` must already be expressed in the
// state's diagonal basis (SchmidtFrame::rotate_bob). Returned on the state's
// support (dimension = spectrum size). Unit trace, PSD; measuring it with
// {M_xa} similarly rotated and restricted reproduces p(ab|xy) / p(b|y).
Matrix rho_yb(const SchmidtSpectrum& spectrum, const Matrix& effect, double p_b);

// F(rho, sigma) = trace norm of sqrt(rho) sqrt(sigma); in [0, 1].
// Square roots go through Hermitian eigendecompositions with eigenvalues
// clipped at zero.
double fidelity(const Matrix& rho, const Matrix& sigma);

// Tr(rho sigma), real part; satisfies Tr(rho sigma) <= F(rho, sigma)^2.
double trace_overlap(const Matrix& rho, const Matrix& sigma);

// Entropies in bits. Order-n entropy (1/(1-n)) log2(sum lambda_i^n) for
// n > 0, n != 1; it is non-increasing in n and converges onto the von
// Neumann entropy -sum lambda_i log2 lambda_i as n -> 1.
double renyi_entropy_bits(const std::vector<double>& spectrum, double n);
double von_neumann_entropy_bits(const std::vector<double>& spectrum);

struct Entropies {
    double renyi;
    double von_neumann;
};
Entropies entropies(const std::vector<double>& spectrum, double n);
Entropies entropies(const Matrix& rho, double n);

// Eigenvalues of a Hermitian matrix, descending, negatives clipped at zero.
std::vector<double> state_spectrum(const Matrix& rho);

Matrix partial_trace_b(const Matrix& rho, int dim_a, int dim_b);
Matrix partial_trace_a(const Matrix& rho, int dim_a, int dim_b);
double purity(const Matrix& rho);

// Purification of rho across A|(B x C): a pure state whose coefficient
// spectrum equals the spectrum of rho_A. Realizes the compression-isometry
// picture used by the mixed-state bounds.
PureState purify(const MixedState& state);

// Deterministic seeded experiment generator: a Haar-like random pure state
// on C^d x C^d and random POVMs built as G_a = W W^dagger, S = sum G_a,
// M_a = S^{-1/2} G_a S^{-1/2} (redrawn if S is near-singular). All
// randomness derives from the seed; identical seeds give identical specs on
// every platform.
ExperimentSpec random_instance(int d, int n_x, int n_y, int n_a, int n_b, std::uint64_t seed);

// Same with a random full-rank mixed state on C^d x C^d.
ExperimentSpec random_mixed_instance(int d, int n_x, int n_y, int n_a, int n_b,
                                     std::uint64_t seed);

} // namespace bellcert::sim

#endif
