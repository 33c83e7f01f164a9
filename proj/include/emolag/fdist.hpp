#ifndef EMOLAG_FDIST_HPP
#define EMOLAG_FDIST_HPP

namespace emolag::econ {

double log_beta(double a, double b);

// Regularized incomplete beta function I_x(a, b), evaluated with the
// Lentz continued fraction. Relative accuracy ~1e-14 over the tested
// (F, df) grid; requires a > 0, b > 0, x in [0, 1].
double regularized_incomplete_beta(double x, double a, double b);

// Upper-tail probability P(F > f) for the F distribution with
// (df_num, df_den) degrees of freedom. f <= 0 gives 1.
double f_tail_prob(double f, double df_num, double df_den);

}  // namespace emolag::econ

#endif  // EMOLAG_FDIST_HPP
