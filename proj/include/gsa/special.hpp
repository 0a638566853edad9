#ifndef GSA_SPECIAL_HPP
#define GSA_SPECIAL_HPP

namespace gsa {

/// Regularized incomplete beta I_x(a, b) by continued fraction.
double betainc(double a, double b, double x);

/// Student-t CDF with df degrees of freedom.
double student_t_cdf(double t, double df);

/// Two-sided p-value P(|T_df| > |t|).
double student_t_pvalue(double t, double df);

/// Upper-alpha quantile: t with P(T_df > t) = alpha (bisection on the CDF).
double student_t_upper_quantile(double alpha, double df);

}  // namespace gsa

#endif
