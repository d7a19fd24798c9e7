#pragma once

// Central numeric tolerances. Exact-rational code paths take no tolerance;
// every floating comparison in the library references these constants.
namespace berezin::tol {

inline constexpr double quadrature_weight_sum = 1e-13;
inline constexpr double quadrature_exactness  = 1e-12;  // relative, degree <= 2n-1
inline constexpr double hermitian_defect      = 1e-12;  // entrywise, eigensolver input
inline constexpr double symmetric_eigen       = 1e-10;  // * ||M||
inline constexpr double general_eigen         = 1e-9;   // * ||M||
inline constexpr double irrep_homomorphism    = 1e-12;
inline constexpr double irrep_unitarity       = 1e-12;
inline constexpr double irrep_schur           = 1e-9;
inline constexpr double stabilizer_accept     = 1e-10;
inline constexpr double stabilizer_reject     = 1e-6;
inline constexpr double bi_invariance         = 1e-12;
inline constexpr double bi_invariance_fatal   = 1e-9;
inline constexpr double markov_row_sum        = 1e-10;
inline constexpr double gelfand_convolution   = 1e-10;
inline constexpr double spectrum_match        = 1e-9;
inline constexpr double fourier_zero_drop     = 1e-11;  // |value| below this is kernel padding
inline constexpr double rank_one              = 1e-9;
inline constexpr double funk_hecke_match      = 1e-9;
inline constexpr double character_match       = 1e-6;
inline constexpr double unit_vector           = 1e-12;

inline constexpr int max_quadrature_points = 10000;
inline constexpr int max_general_dim       = 32;

}
