#pragma once
// Constructors for the algebra family: the fibration presentations T_q^f, their
// structural duals, lattice fibrations over permutation groups, the function
// type subalgebras, and group algebra controls.

#include "qmt/cocycle.hpp"
#include "qmt/lattice.hpp"
#include "qmt/permgroup.hpp"
#include "qmt/presentation.hpp"

namespace qmt {

// Square root branch of q = zeta_N used on the minus sector: zeta_{2N} for even
// N, q^{(N+1)/2} for odd N (both square to q).
Cyclo half_power(int N);

Presentation build_kp(int N);
Presentation build_dual_w(int N);

// theta must satisfy the cocycle condition, L must be G-invariant, and every
// theta_g must pair integrally with L on either side; violations throw
// std::invalid_argument naming the offending (g, i, j).
Presentation build_fibration(const PermGroup& G, const CocycleFamily& theta, const Lattice& L);
Presentation build_w_subalgebra(const PermGroup& G, const CocycleFamily& theta, const Lattice& L);

Presentation build_group_algebra(const PermGroup& G);
Presentation build_function_algebra(const PermGroup& G);

// Named cocycle families on the standard generators.
CocycleFamily flip_family(const PermGroup& Z2, const mpq_class& t);  // [[0,t],[-t,0]]
CocycleFamily t1_family(const PermGroup& Z3, const mpq_class& a, const mpq_class& b, long N);
CocycleFamily antisym_z3_family(const PermGroup& Z3, const mpq_class& theta, const mpq_class& rho);

// Basis index helpers for the structured presentations.
int kp_index(int N, int minus, int a, int b);
int fib_index(const Lattice& L, int g, const ZVec& v);

}  // namespace qmt
