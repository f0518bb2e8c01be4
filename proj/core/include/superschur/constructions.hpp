#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superschur/algebra.hpp"
#include "superschur/structure.hpp"

namespace superschur {

/// Ab(m,n) on basis a1..am | b1..bn.
LieSuperalgebra abelian(std::size_t m, std::size_t n);

/// H(p,q), even center. Basis u1..up, v1..vp, z | w1..wq with
/// [u_i, v_i] = z and [w_k, w_k] = z. Throws InvalidParams when p + q == 0.
LieSuperalgebra heisenberg_even(std::size_t p, std::size_t q);

/// H(k), odd center. Basis u1..uk | z, w1..wk with [u_i, w_i] = z.
/// Throws InvalidParams when k == 0.
LieSuperalgebra heisenberg_odd(std::size_t k);

/// The free class-two cover of Ab(m,n): generators u_i | v_j together with
/// x_{k,l} = [u_k, u_l] (k < l), z_{s,t} = [v_s, v_t] (s <= t) even and
/// y_{p,q} = [u_p, v_q] odd. Returned as the pair (H, H^2).
DefiningPair free_two_step_cover(std::size_t m, std::size_t n);

/// The 4-dimensional filiform Lie algebra: [x,y] = z, [x,z] = t.
LieSuperalgebra model_l4();

/// Resolves `Ab(m,n)`, `H(p,q)`, `H(k)` or `L4`. Whitespace inside the
/// parentheses is allowed. Throws UnknownName or InvalidParams.
LieSuperalgebra builtin(std::string_view name);

struct NamedAlgebra {
  std::string name;
  LieSuperalgebra algebra;
};

/// Small non-abelian named algebras and direct sums used throughout the
/// tests: every Heisenberg superalgebra up to dimension 6, L4, and the
/// non-abelian rows of the classification table.
std::vector<NamedAlgebra> model_registry();

}  // namespace superschur
