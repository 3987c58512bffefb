// Regenerate with tests/oracles/generate.py.
#pragma once

#include <complex>

namespace oracle {

using C = std::complex<double>;

inline const C theta_2_p01_k20 = {-7.3901872371383851614e-1, 0.0};
inline const C theta_complex = {5.6691377633636138005e-1, -5.1676466238280475737e-1};  // x = 0.3+0.7i, p = 0.2+0.1i
inline const C qp_pos = {6.7095480370980670303e-3, 6.713464445713428231e-3};  // (0.4+0.2i; 0.9-0.1i, 0.25)_3
inline const C qp_neg = {8.7968175584913390793, 1.0466948385123130207};  // (0.4+0.2i; 0.9-0.1i, 0.25)_{-2}
inline const C weight_2_3 = {1.6294156249150943717e+1, 0.0};  // a=1.1 b=0.7 q=0.9 p=0.2
inline const C shifted_weight_2_1_s1_t2 = {6.2686629938757966912e-1, -5.1570062248997915165e-2};  // a=0.8+0.3i b=1.2-0.1i q=0.95+0.05i p=0.1
inline const C staircase_weight = {-2.3838128438841210331e-1, -2.137453013689939877e-1};  // (0,0):NENE, same params
inline constexpr double q_area_sum_2_2_half = 2.1875;  // sum of q^area over (0,0)->(2,2), q=1/2
// Shared elliptic params: a=0.9+0.2i b=1.3-0.4i q=0.85+0.1i p=0.15+0.05i
inline const C gf_m1_1_to_2_4 = {-1.2556149777849853412, -1.7101509016558764704e-1};
inline const C nonint_r2 = {4.2763518895412028701e-3, 2.9128129113454446794e-2};  // starts (1,1),(2,0) ends (4,3),(4,2)
inline const C product_formula_a_r2 = {1.5425851295381263398e-2, 1.3275107231821623973e-2};  // starts (1,1),(2,0) ends (4,4),(4,3)
inline const C conv_full_r2 = {-3.3701962008791583857e-3, -1.9408004040916455091e-3};  // starts (1,1),(2,0) ends (5,5),(6,4)
inline const C warnaar_r2 = {-4.1872312717564781308, 2.8619736305729581834};
inline const C warnaar_r3 = {-7.4125602105832358983e+1, -6.302711932678898257e+1};
// Warnaar params: A=0.7+0.3i B=1.1-0.2i C=0.6+0.5i q=0.9+0.15i p=0.2-0.1i,
// X = 1.2+0.1i, 0.8-0.3i[, 1.5+0.4i]
// Series params: a=0.8+0.4i b=1.3+0.2i c=0.7-0.5i d=1.6+0.3i q=0.9+0.2i p=0.3+0.1i
inline const C ft_sum_m5 = {4.5277302821139044959e-1, -1.7806562038932526798e-1};
inline const C ft_transform_n4 = {-2.4146159242077190334e-1, -9.5741238954448228275e-1};  // e=1.1-0.3i f=0.6+0.6i
inline const C multi_sum_r1_m3 = {4.3900203792526254763e-1, -1.9526680222785857495e-1};
inline const C multi_transform_r1_m3 = {-2.1118004402077902534e-1, -1.0180312721536701455};
inline const C multi_sum_r2_m3 = {-4.6480121914795253356e-4, 4.8852379116937503991e-4};
inline const C multi_transform_r2_m3 = {-5.9940724654308276237e-4, -2.7197651012396950565e-3};
inline const C multi_sum_r3_m4 = {5.0094141599583231664e-9, -2.3952087893532818848e-8};
inline const C multi_transform_r3_m4 = {-1.74067590944263462e-8, 2.7144623842460350722e-9};
// Jackson 8phi7 at q=2/3, a=3/7 b=5/4 c=-2/9 d=7/5 m=4, exact: 6776912045094210539542679/7654473608234630787697464
inline constexpr double jackson_m4 = 0.8853531140016806;

}  // namespace oracle
