#pragma once

#include "betinfo/prob.hpp"

/// Entropy family: Shannon, Rényi, Tsallis, Sharma-Mittal, the Arimoto and the
/// H^1/H^2/H^4 conditional entropies, the two-order conditional entropy built
/// by composing the eta map with the Arimoto form, its mutual information, and
/// the multiplicative chain-rule checker. All values in nats.
namespace betinfo {

/// Two-order parameter (q, r): q extended real, r finite.
struct OrderPair {
  double q;
  double r;
};

/// log of the order-q power mean probability (Σ p^q)^{1/(q-1)}.
/// q = 1 branch is the geometric mean over the support; q = 0 gives
/// 1/|support|; q = ±inf give max/min over support.
double log_renyi_probability(const Pmf& p, double q);

/// log of the conditional version (Σ_g (Σ_x j(x,g)^q)^{1/q})^{q/(q-1)}.
double log_renyi_cond_probability(const Joint2& j, double q);

/// Convenience wrappers returning the probabilities themselves.
double renyi_probability(const Pmf& p, double q);
double renyi_cond_probability(const Joint2& j, double q);

/// sgn(q) · ln(1 / p_q(X)). Shannon at q = 1, ln|support| at q = 0,
/// -ln max p at q = +inf; q < 0 requires full support.
double renyi_entropy(const Pmf& p, double q);

double shannon_entropy(const Pmf& p);
double tsallis_entropy(const Pmf& p, double q);

/// sgn(q) · eta_r(sgn(q) · renyi_entropy); reduces to Rényi at r = 1 and to
/// Tsallis at r = q.
double sharma_mittal_entropy(const Pmf& p, OrderPair o);

/// sgn(q) · ln(1 / p_q(X|G)); Shannon conditional entropy at q = 1.
double arimoto_cond_entropy(const Joint2& j, double q);

/// Σ_g p(g) H^R_α(X | G = g).
double cond_entropy_h1(const Joint2& j, double alpha);

/// H^R_α(X, G) - H^R_α(G).
double cond_entropy_h2(const Joint2& j, double alpha);

/// sgn(α)/(1-α) · ln[Σ_g p(g) Σ_x p(x|g)^α]; Shannon conditional at α = 1.
double cond_entropy_h4(const Joint2& j, double alpha);

/// sgn(q) · eta_r(sgn(q) · arimoto_cond_entropy); Arimoto at r = 1.
double id_cond_entropy(const Joint2& j, OrderPair o);

/// Two-order mutual information: sharma_mittal(X) (-)_r id_cond(X|G).
/// Throws degenerate_order_error on the pseudo-subtraction pole.
double id_mutual_information(const Joint2& j, OrderPair o);

/// Both sides of the multiplicative chain-rule inequality
///   sgn(q)·H_{q,r}(X|G)  >=  sgn(q)·[ H_{q,r}(XG) (-)_r ln_r K ],
/// where K is the number of side-information symbols |G| (the grouping the
/// underlying convexity argument averages over).
struct ChainRuleReport {
  double lhs;
  double rhs;
  bool holds;  // lhs >= rhs - 1e-10
};
ChainRuleReport check_chain_rule(const Joint2& j, OrderPair o);

}  // namespace betinfo
