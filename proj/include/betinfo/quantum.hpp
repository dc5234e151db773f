#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "betinfo/prob.hpp"
#include "betinfo/wealth_ratio.hpp"

/// Quantum state betting layer: small-dimension (d <= 3) density matrices,
/// POVMs and Kraus channels; the Born-rule conditional they induce; the
/// uninformative-measurement and constant-channel baselines; and the
/// operational identities tying the two-order mutual information of the
/// induced joint to a maximal-wealth ratio, with and without a noisy channel.
namespace betinfo {

using Cmat = Eigen::MatrixXcd;

/// Trace-one positive semidefinite matrix. Constructed via make_density,
/// which symmetrizes (m + m.adjoint())/2 and validates trace within 1e-10 and
/// eigenvalues >= -1e-10.
struct DensityMatrix {
  Cmat m;
  std::size_t dim() const { return static_cast<std::size_t>(m.rows()); }
};
DensityMatrix make_density(const Cmat& m);

/// Measurement: PSD effects summing to the identity (both within 1e-10).
struct Povm {
  std::vector<Cmat> effects;
  std::size_t dim() const {
    return effects.empty() ? 0 : static_cast<std::size_t>(effects[0].rows());
  }
  std::size_t size() const { return effects.size(); }
};
Povm make_povm(std::vector<Cmat> effects);

/// Labeled source of quantum states: states with a prior over them.
struct QuantumEnsemble {
  std::vector<DensityMatrix> states;
  Pmf prior;
  std::size_t dim() const { return states.empty() ? 0 : states[0].dim(); }
};
QuantumEnsemble make_ensemble(std::vector<DensityMatrix> states, Pmf prior);

/// Trace-preserving completely positive map in Kraus form:
/// sum K^dagger K = identity within 1e-10.
struct KrausChannel {
  std::vector<Cmat> kraus;
  std::size_t dim() const {
    return kraus.empty() ? 0 : static_cast<std::size_t>(kraus[0].rows());
  }
};
KrausChannel make_channel(std::vector<Cmat> kraus);

DensityMatrix apply_channel(const KrausChannel& n, const DensityMatrix& rho);

/// Stock objects.
Povm computational_povm(std::size_t d);
Povm uninformative_povm(const Pmf& qg, std::size_t d);  // effects q(g) * I
KrausChannel identity_channel(std::size_t d);
/// rho -> (1-lambda) rho + lambda sigma tr(rho).
KrausChannel replace_mixture_channel(double lambda, const DensityMatrix& sigma);
KrausChannel depolarizing_channel(std::size_t d, double lambda);
/// Qubit amplitude damping with decay probability gamma in [0, 1].
KrausChannel amplitude_damping(double gamma);

/// Born rule: p(g|x) = tr[M_g rho_x] (with rho_x passed through the channel
/// when one is given). Columns indexed by x, rows by g; each column is a PMF
/// within 1e-10.
CondTable induced_conditional(const QuantumEnsemble& e, const Povm& m,
                              const KrausChannel* n = nullptr);

/// Joint p(x, g) = prior(x) * p(g|x) induced by the Born rule.
Joint2 induced_joint(const QuantumEnsemble& e, const Povm& m,
                     const KrausChannel* n = nullptr);

/// Every effect proportional to the identity within tol.
bool is_uninformative(const Povm& m, double tol = 1e-9);
/// Channel output independent of the input state within tol (checked on a
/// spanning set of matrix units).
bool is_constant(const KrausChannel& n, double tol = 1e-9);

/// Two-order mutual information of the induced joint versus the utility of
/// the maximal-wealth ratio between betting with the measurement outcome and
/// betting with no (equivalently, uninformative) side information, under
/// constant odds sgn(q)*C. agree within 1e-8.
struct QsbReport {
  double id_mi;
  double log_ratio_utility;
  bool agree;
};
QsbReport qsb_identity(const QuantumEnsemble& e, const Povm& m,
                       const OrderPair& o, double C);

/// Same identity through a noisy channel at a fixed measurement, or with the
/// measurement chosen by a finite search (Bloch-sphere projective grid for
/// d = 2 plus seeded random POVMs); search results are lower bounds on the
/// POVM supremum and are flagged as such.
struct NqsbReport {
  double id_mi;
  double log_ratio_utility;
  bool agree;
  Povm best_measurement;
  bool search_lower_bound;
};
NqsbReport nqsb_identity(const QuantumEnsemble& e, const Povm& m,
                         const KrausChannel& n, const OrderPair& o, double C);

struct QuantumSearchConfig {
  std::size_t sphere_points = 512;
  std::size_t random_povms = 64;
  std::uint64_t seed = 1;
};
NqsbReport nqsb_identity_search(const QuantumEnsemble& e, const KrausChannel& n,
                                const OrderPair& o, double C,
                                const QuantumSearchConfig& cfg = {});

}  // namespace betinfo
