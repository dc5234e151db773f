#pragma once

#include "betinfo/entropies.hpp"
#include "betinfo/prob.hpp"

/// Rényi divergence and five conditional divergences over column-stochastic
/// tables: the Sibson, Csiszár, and root-inside-the-mixture (blp) forms plus
/// two forms (n1, n2) that average the reference table inside a
/// (1-α)/α-power coupling. Includes the inequality checkers and the
/// divergence-to-entropy identities against the uniform reference.
///
/// Conventions shared by every function here:
///  - values in nats; computation in the log domain with log-sum-exp;
///  - orders within 1e-10 of 1 dispatch to the exact KL-based closed form;
///  - orders ±inf are evaluated by a saturation ladder (|α| doubled until the
///    value stabilizes), reported as numerical extensions;
///  - negative orders require full support;
///  - 0·log 0 = 0; a zero reference entry raised to a negative power makes
///    the divergence +inf unless its probability weight is zero.
namespace betinfo {

/// sgn(α)/(α-1) · ln Σ p^α q^{1-α}; KL at α = 1, -ln q(supp p) at α = 0,
/// ln max p/q at α = +inf, ln max q/p at α = -inf.
double renyi_divergence(const Pmf& p, const Pmf& q, double alpha);

/// Same computation on raw weight vectors (the reference may be unnormalized;
/// used by diagnostic identities).
double renyi_divergence_weights(std::span<const double> p,
                                std::span<const double> q, double alpha);

/// sgn(α)/(α-1) · ln Σ_b p(b) Σ_a pc(a|b)^α qc(a|b)^{1-α}.
double sibson_crd(const CondTable& pc, const CondTable& qc, const Pmf& pb,
                  double alpha);

/// Σ_b p(b) D_α(pc(·|b) || qc(·|b)).
double csiszar_crd(const CondTable& pc, const CondTable& qc, const Pmf& pb,
                   double alpha);

/// |α|/(α-1) · ln Σ_g p(g) (Σ_x pc^α qc^{1-α})^{1/α}.
double blp_crd(const CondTable& pc, const CondTable& qc, const Pmf& pg,
               double alpha);

/// sgn(α)/(α-1) · ln Σ_x (Σ_y p(y) pc(x|y) qc(x|y)^{(1-α)/α})^α.
/// α = 1 closed form: Σ_x p(x) ln p(x) - Σ_{x,y} p(y) pc(x|y) ln qc(x|y)
/// with p(x) = Σ_y pc(x|y) p(y).
double n1_crd(const CondTable& pc, const CondTable& qc, const Pmf& py,
              double alpha);

/// |α|/(α-1) · ln Σ_g p(g) (Σ_x (Σ_y p(y|g) pc(x|g,y) qc(x|g,y)^{(1-α)/α})^α)^{1/α}.
/// α = 1 closed form: Σ_g p(g)[Σ_x p(x|g) ln p(x|g)
///                              - Σ_{x,y} p(y|g) pc(x|g,y) ln qc(x|g,y)].
double n2_crd(const CondTable3& pc, const CondTable3& qc, const Pmf& pg,
              const CondTable& pyg, double alpha);

/// Symmetric ε-extrapolation of a divergence at α = 1: the average of the
/// values at 1±ε cancels the linear term in ε. Used to confirm that the
/// α = 1 closed forms agree with the two-sided limit.
double n1_crd_eps_limit(const CondTable& pc, const CondTable& qc, const Pmf& py,
                        double eps = 1e-5);
double n2_crd_eps_limit(const CondTable3& pc, const CondTable3& qc,
                        const Pmf& pg, const CondTable& pyg, double eps = 1e-5);

/// lhs <= rhs + 1e-10.
struct InequalityReport {
  double lhs;
  double rhs;
  bool holds;
};

/// Marginal-contraction check at order α in (0,1): compares
/// D_α(Σ_y pc p(y) || Σ_y qc p(y)) against n1_crd at the same order.
InequalityReport check_dpi_n1(const CondTable& pc, const CondTable& qc,
                              const Pmf& py, double alpha);

/// n1 <= blp at any valid nonzero order.
InequalityReport check_n1_le_blp(const CondTable& pc, const CondTable& qc,
                                 const Pmf& pw, double alpha);

/// Residuals of the four divergence-to-entropy identities against the uniform
/// reference u_X on K symbols:
///   sibson  = sgn(α) ln K - H^4,   csiszar = sgn(α) ln K - H^1,
///   blp     = sgn(α) ln K - H^A,   renyi(marginal) = sgn(α) ln K - H^R.
struct CrdIdentityReport {
  double sibson_residual;
  double csiszar_residual;
  double blp_residual;
  double renyi_residual;
  bool pass;  // all four within 1e-10
};
CrdIdentityReport crd_entropy_identities(const Joint2& j, double alpha);

}  // namespace betinfo
