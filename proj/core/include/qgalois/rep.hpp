#pragma once

#include "qgalois/findim.hpp"
#include "qgalois/linalg.hpp"
#include "qgalois/report.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qgalois {

/// 3x3 building blocks: J cyclic shift, Q = diag(1, q^-1, q^-2), N lower shift.
ExactMatrix rho_J();
ExactMatrix rho_Q();
ExactMatrix rho_N();

/// a -> J(x)I(x)I, b -> Q(x)N(x)I, c -> Q(x)I(x)N on C^27.
ExactMatrix rho_generator(const std::string& name);
/// Images of the 27 A(F) basis words.
const std::vector<ExactMatrix>& rho_basis();
ExactMatrix rho(const NCPoly& x);
ExactMatrix rho(const FinVec& x);
/// h^{klm}(M) = M[9k+3l+m][0]
CycloScalar h_klm(const ExactMatrix& m, unsigned k, unsigned l, unsigned n);

/// rho respects the A(F) rules and products on all basis pairs.
Report verify_rho();
/// Rank 27 and the h^{klm} delta identity.
Report faithfulness_check();

/// x -> [[0,1,0],[0,0,1],[1,0,0]], y -> diag(1,q,q^2).
ExactMatrix m3_x_matrix();
ExactMatrix m3_y_matrix();
Report verify_m3();

/// Matrix with entries in A(F), indexed [row j][column i] for Delta_R e_i = sum_j e_j (x) N_ji.
using CorepMatrix = std::vector<std::vector<NCPoly>>;

/// Computed from the coaction x -> x (x) a + y (x) c, y -> x (x) b + y (x) d on the m3 basis
/// 1, x, y, x^2, xy, y^2, x^2y, xy^2, x^2y^2.
const CorepMatrix& corep_matrix();
/// The displayed 9x9 matrix and its two 3x3 blocks, parsed in A(F).
CorepMatrix corep_reference();
CorepMatrix corep_n1_reference();
CorepMatrix corep_n2_reference();
CorepMatrix restrict_corep(const CorepMatrix& n, const std::vector<std::size_t>& indices);

/// Zero-based index sets: {e1,e7,e8}, {e2,e3,e9}, {e4,e5,e6}.
const std::vector<std::size_t>& corep_block_n1();
const std::vector<std::size_t>& corep_block_n2();
const std::vector<std::size_t>& corep_block_middle();

Report corep_axioms_and_reduction();

/// 3[n]_1 + [n]_2 = n, 0 <= [n]_2 < 3
long bracket1(long n);
long bracket2(long n);
bool bracket_identity(long k, long m, long u);

/// Coinvariants of the quantum plane inside slq2 up to degree 3*bound, the
/// bracket identity on 0..5, and the crossed product rule on the coordinates
/// x^{3p+k} y^{3r+l}.
Report quantum_plane_coinvariants(unsigned bound = 2);

}  // namespace qgalois
