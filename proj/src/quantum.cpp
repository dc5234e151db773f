#include "betinfo/quantum.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "betinfo/numeric.hpp"

namespace betinfo {
namespace {

constexpr double kQuantumTol = 1e-10;
constexpr std::size_t kMaxDim = 3;

Cmat symmetrize(const Cmat& m) { return 0.5 * (m + m.adjoint()); }

void check_square(const Cmat& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
  if (static_cast<std::size_t>(m.rows()) > kMaxDim) {
    throw std::invalid_argument(std::string(what) +
                                ": dimensions above 3 are unsupported");
  }
}

double min_eigenvalue(const Cmat& hermitian) {
  Eigen::SelfAdjointEigenSolver<Cmat> es(hermitian,
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Cmat apply_to_matrix(const KrausChannel& n, const Cmat& a) {
  Cmat out = Cmat::Zero(a.rows(), a.cols());
  for (const Cmat& k : n.kraus) out += k * a * k.adjoint();
  return out;
}

}  // namespace

DensityMatrix make_density(const Cmat& m) {
  check_square(m, "make_density");
  DensityMatrix rho{symmetrize(m)};
  if (std::abs(rho.m.trace().real() - 1.0) > kQuantumTol ||
      std::abs(rho.m.trace().imag()) > kQuantumTol) {
    throw std::invalid_argument("make_density: trace must be 1");
  }
  if (min_eigenvalue(rho.m) < -kQuantumTol) {
    throw std::invalid_argument("make_density: matrix must be PSD");
  }
  return rho;
}

Povm make_povm(std::vector<Cmat> effects) {
  if (effects.empty()) {
    throw std::invalid_argument("make_povm: needs at least one effect");
  }
  const Eigen::Index d = effects[0].rows();
  Cmat sum = Cmat::Zero(d, d);
  for (Cmat& e : effects) {
    check_square(e, "make_povm");
    if (e.rows() != d) {
      throw std::invalid_argument("make_povm: effects must share a dimension");
    }
    e = symmetrize(e);
    if (min_eigenvalue(e) < -kQuantumTol) {
      throw std::invalid_argument("make_povm: effect not PSD");
    }
    sum += e;
  }
  if ((sum - Cmat::Identity(d, d)).cwiseAbs().maxCoeff() > kQuantumTol) {
    throw std::invalid_argument("make_povm: effects must sum to identity");
  }
  return Povm{std::move(effects)};
}

QuantumEnsemble make_ensemble(std::vector<DensityMatrix> states, Pmf prior) {
  if (states.empty()) {
    throw std::invalid_argument("make_ensemble: needs at least one state");
  }
  if (states.size() != prior.w.size()) {
    throw std::invalid_argument(
        "make_ensemble: prior size must match state count");
  }
  const std::size_t d = states[0].dim();
  for (const DensityMatrix& rho : states) {
    if (rho.dim() != d) {
      throw std::invalid_argument(
          "make_ensemble: states must share a dimension");
    }
  }
  return QuantumEnsemble{std::move(states), std::move(prior)};
}

KrausChannel make_channel(std::vector<Cmat> kraus) {
  if (kraus.empty()) {
    throw std::invalid_argument("make_channel: needs at least one operator");
  }
  const Eigen::Index d = kraus[0].rows();
  Cmat sum = Cmat::Zero(d, d);
  for (const Cmat& k : kraus) {
    check_square(k, "make_channel");
    if (k.rows() != d) {
      throw std::invalid_argument(
          "make_channel: operators must share a dimension");
    }
    sum += k.adjoint() * k;
  }
  if ((sum - Cmat::Identity(d, d)).cwiseAbs().maxCoeff() > kQuantumTol) {
    throw std::invalid_argument("make_channel: channel must preserve trace");
  }
  return KrausChannel{std::move(kraus)};
}

DensityMatrix apply_channel(const KrausChannel& n, const DensityMatrix& rho) {
  if (n.dim() != rho.dim()) {
    throw std::invalid_argument("apply_channel: dimension mismatch");
  }
  return make_density(apply_to_matrix(n, rho.m));
}

Povm computational_povm(std::size_t d) {
  std::vector<Cmat> effects;
  effects.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Cmat e = Cmat::Zero(static_cast<Eigen::Index>(d),
                        static_cast<Eigen::Index>(d));
    e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    effects.push_back(std::move(e));
  }
  return make_povm(std::move(effects));
}

Povm uninformative_povm(const Pmf& qg, std::size_t d) {
  std::vector<Cmat> effects;
  effects.reserve(qg.w.size());
  for (double q : qg.w) {
    effects.push_back(q * Cmat::Identity(static_cast<Eigen::Index>(d),
                                         static_cast<Eigen::Index>(d)));
  }
  return make_povm(std::move(effects));
}

KrausChannel identity_channel(std::size_t d) {
  return make_channel({Cmat::Identity(static_cast<Eigen::Index>(d),
                                      static_cast<Eigen::Index>(d))});
}

KrausChannel replace_mixture_channel(double lambda,
                                     const DensityMatrix& sigma) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument(
        "replace_mixture_channel: lambda must lie in [0, 1]");
  }
  const Eigen::Index d = static_cast<Eigen::Index>(sigma.dim());
  std::vector<Cmat> kraus;
  if (lambda < 1.0) {
    kraus.push_back(std::sqrt(1.0 - lambda) * Cmat::Identity(d, d));
  }
  if (lambda > 0.0) {
    Eigen::SelfAdjointEigenSolver<Cmat> es(sigma.m);
    for (Eigen::Index k = 0; k < d; ++k) {
      const double ev = std::max(0.0, es.eigenvalues()(k));
      if (ev == 0.0) continue;
      for (Eigen::Index i = 0; i < d; ++i) {
        Cmat op = Cmat::Zero(d, d);
        op.col(i) = std::sqrt(lambda * ev) * es.eigenvectors().col(k);
        kraus.push_back(std::move(op));
      }
    }
  }
  return make_channel(std::move(kraus));
}

KrausChannel depolarizing_channel(std::size_t d, double lambda) {
  const Eigen::Index di = static_cast<Eigen::Index>(d);
  return replace_mixture_channel(
      lambda, make_density(Cmat::Identity(di, di) / static_cast<double>(d)));
}

KrausChannel amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("amplitude_damping: gamma must lie in [0, 1]");
  }
  Cmat k0 = Cmat::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  Cmat k1 = Cmat::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma);
  return make_channel({std::move(k0), std::move(k1)});
}

CondTable induced_conditional(const QuantumEnsemble& e, const Povm& m,
                              const KrausChannel* n) {
  if (e.dim() != m.dim() || (n != nullptr && n->dim() != e.dim())) {
    throw std::invalid_argument("induced_conditional: dimension mismatch");
  }
  const std::size_t nx = e.states.size();
  const std::size_t ng = m.size();
  std::vector<double> w(ng * nx, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    const Cmat rho =
        n == nullptr ? e.states[x].m : apply_to_matrix(*n, e.states[x].m);
    double col_sum = 0.0;
    for (std::size_t g = 0; g < ng; ++g) {
      double v = (m.effects[g] * rho).trace().real();
      if (v < 0.0) {
        if (v < -kQuantumTol) {
          throw std::runtime_error(
              "induced_conditional: negative Born-rule weight");
        }
        v = 0.0;
      }
      w[g * nx + x] = v;
      col_sum += v;
    }
    if (std::abs(col_sum - 1.0) > kQuantumTol) {
      throw std::runtime_error(
          "induced_conditional: Born-rule column does not normalize");
    }
    for (std::size_t g = 0; g < ng; ++g) w[g * nx + x] /= col_sum;
  }
  return make_cond_table(ng, nx, std::move(w));
}

Joint2 induced_joint(const QuantumEnsemble& e, const Povm& m,
                     const KrausChannel* n) {
  const CondTable cond = induced_conditional(e, m, n);
  const std::size_t nx = e.states.size();
  const std::size_t ng = m.size();
  std::vector<double> w(nx * ng, 0.0);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t g = 0; g < ng; ++g) {
      w[x * ng + g] = e.prior.w[x] * cond.at(g, x);
    }
  }
  return make_joint2(nx, ng, std::move(w));
}

bool is_uninformative(const Povm& m, double tol) {
  const Eigen::Index d = static_cast<Eigen::Index>(m.dim());
  for (const Cmat& eff : m.effects) {
    const double c = eff.trace().real() / static_cast<double>(d);
    if ((eff - c * Cmat::Identity(d, d)).cwiseAbs().maxCoeff() > tol) {
      return false;
    }
  }
  return true;
}

bool is_constant(const KrausChannel& n, double tol) {
  const Eigen::Index d = static_cast<Eigen::Index>(n.dim());
  Cmat unit = Cmat::Zero(d, d);
  unit(0, 0) = 1.0;
  const Cmat sigma = apply_to_matrix(n, unit);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Cmat eij = Cmat::Zero(d, d);
      eij(i, j) = 1.0;
      const Cmat out = apply_to_matrix(n, eij);
      const Cmat want = (i == j) ? sigma : Cmat::Zero(d, d);
      if ((out - want).cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

QsbReport qsb_identity(const QuantumEnsemble& e, const Povm& m,
                       const OrderPair& o, double C) {
  const IdMiOperationalReport rep =
      id_mi_operational(induced_joint(e, m, nullptr), o, C);
  return QsbReport{rep.lhs_id_mi, rep.rhs_utility_of_ratio, rep.agree};
}

NqsbReport nqsb_identity(const QuantumEnsemble& e, const Povm& m,
                         const KrausChannel& n, const OrderPair& o, double C) {
  const IdMiOperationalReport rep =
      id_mi_operational(induced_joint(e, m, &n), o, C);
  return NqsbReport{rep.lhs_id_mi, rep.rhs_utility_of_ratio, rep.agree, m,
                    false};
}

namespace {

// Rank-one qubit projector with Bloch vector (bx, by, bz).
Povm bloch_projective_povm(double bx, double by, double bz) {
  Cmat p = Cmat::Zero(2, 2);
  p(0, 0) = 0.5 * (1.0 + bz);
  p(1, 1) = 0.5 * (1.0 - bz);
  p(0, 1) = 0.5 * std::complex<double>(bx, -by);
  p(1, 0) = 0.5 * std::complex<double>(bx, by);
  return make_povm({p, Cmat::Identity(2, 2) - p});
}

Cmat ginibre(Rng& rng, Eigen::Index d) {
  Cmat a(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      a(i, j) = std::complex<double>(rng.normal(), rng.normal()) / std::sqrt(2.0);
    }
  }
  return a;
}

// Random POVM with k effects: E_i = S^{-1/2} A_i A_i^dagger S^{-1/2}.
Povm random_povm(Rng& rng, Eigen::Index d, std::size_t k) {
  std::vector<Cmat> raw;
  raw.reserve(k);
  Cmat s = Cmat::Zero(d, d);
  for (std::size_t i = 0; i < k; ++i) {
    const Cmat a = ginibre(rng, d);
    raw.push_back(a * a.adjoint());
    s += raw.back();
  }
  Eigen::SelfAdjointEigenSolver<Cmat> es(symmetrize(s));
  const Cmat isqrt = es.operatorInverseSqrt();
  std::vector<Cmat> effects;
  effects.reserve(k);
  for (const Cmat& r : raw) effects.push_back(isqrt * r * isqrt);
  // Absorb the residual of the inverse square root into the last effect so
  // completeness holds to validation tolerance.
  Cmat sum = Cmat::Zero(d, d);
  for (const Cmat& eff : effects) sum += eff;
  effects.back() += Cmat::Identity(d, d) - sum;
  return make_povm(std::move(effects));
}

// Haar-random projective measurement from the Q factor of a Ginibre matrix.
Povm random_projective_povm(Rng& rng, Eigen::Index d) {
  const Eigen::HouseholderQR<Cmat> qr(ginibre(rng, d));
  const Cmat q = qr.householderQ();
  std::vector<Cmat> effects;
  effects.reserve(static_cast<std::size_t>(d));
  Cmat sum = Cmat::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    effects.push_back(q.col(i) * q.col(i).adjoint());
    sum += effects.back();
  }
  effects.back() += Cmat::Identity(d, d) - sum;
  return make_povm(std::move(effects));
}

}  // namespace

NqsbReport nqsb_identity_search(const QuantumEnsemble& e, const KrausChannel& n,
                                const OrderPair& o, double C,
                                const QuantumSearchConfig& cfg) {
  const Eigen::Index d = static_cast<Eigen::Index>(e.dim());
  Rng rng(cfg.seed);

  bool found = false;
  NqsbReport best{};
  auto consider = [&](const Povm& m) {
    NqsbReport rep;
    try {
      rep = nqsb_identity(e, m, n, o, C);
    } catch (const std::exception&) {
      return;
    }
    if (!std::isfinite(rep.id_mi)) return;
    if (!found || rep.id_mi > best.id_mi) {
      best = rep;
      found = true;
    }
  };

  consider(computational_povm(static_cast<std::size_t>(d)));
  if (d == 2) {
    const double golden = 0.5 * (1.0 + std::sqrt(5.0));
    const std::size_t npts = std::max<std::size_t>(1, cfg.sphere_points);
    for (std::size_t k = 0; k < npts; ++k) {
      const double z =
          1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(npts);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi =
          2.0 * M_PI * static_cast<double>(k) / golden;
      consider(bloch_projective_povm(r * std::cos(phi), r * std::sin(phi), z));
    }
  } else {
    for (std::size_t k = 0; k < std::max<std::size_t>(1, cfg.sphere_points / 8);
         ++k) {
      consider(random_projective_povm(rng, d));
    }
  }
  const std::size_t counts[] = {2, static_cast<std::size_t>(d),
                                static_cast<std::size_t>(d) + 1,
                                static_cast<std::size_t>(d * d)};
  for (std::size_t i = 0; i < cfg.random_povms; ++i) {
    consider(random_povm(rng, d, counts[i % 4]));
  }

  if (!found) {
    throw std::runtime_error(
        "nqsb_identity_search: no candidate measurement evaluated cleanly");
  }
  best.search_lower_bound = true;
  return best;
}

}  // namespace betinfo
