#pragma once

// Generated by sharp_oracle; do not edit by hand.

namespace frozen {

inline constexpr double exp_over_lorentz = 0.62144962423581314;
inline constexpr double rational_exp_line = 7.3843358175069407;
inline constexpr double re_kernel_3_07_1_m1 = 6.15087004291100593850e-01;
inline constexpr double re_theta_3_0_m1 = 0.15868963902276331;
inline constexpr double im_theta_4_2_m2 = 1.5762226099748789;
inline constexpr double re_theta_3_0_m4o3 = 0.38978321472513809;
inline constexpr double re_theta_3_0_m2o3 = 0.045938789567719173;
inline constexpr double re_theta_5_1p5_0p7 = 0.62790138668878021;
inline constexpr double im_theta_5_1p5_0p7 = -0.21967361856237228;
inline constexpr double re_theta_inf_0_m1 = 0.2082405307719488;
inline constexpr double re_theta_inf_3_m1 = -3.0063630090972874;
inline constexpr double l2_norm_sq_line_4 = 34.615993422234914;
inline constexpr double beta_4 = 0.029461503457918899;
inline constexpr double primal_l1_4 = 1.0198392099084709;
inline constexpr double primal_l2_sq_4 = 0.03004599640923972;
inline constexpr double m_gamma_2p1 = 8.7921950984711483;
inline constexpr double lt_factor_2p1 = 1.1287217125148013;
inline constexpr double clr_factor_2p1 = 27.60051202412208;
inline constexpr double m_gamma_2p5 = 1.1374683921148411;
inline constexpr double lt_factor_2p5 = 1.3288374795520227;
inline constexpr double clr_factor_2p5 = 9.9353775274459785;
inline constexpr double m_gamma_3 = 0.37118569494051677;
inline constexpr double lt_factor_3 = 1.4465530860294083;
inline constexpr double clr_factor_3 = 7.5165103225454646;
inline constexpr double m_gamma_40 = 4.7615022699296795e-05;
inline constexpr double lt_factor_40 = 1.9179579581768873;
inline constexpr double clr_factor_40 = 5.3501625539178634;

}  // namespace frozen
