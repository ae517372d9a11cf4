#pragma once

#include "qmagnus/matpoly.hpp"

namespace qmagnus {

/// Deformation parameter and carrier dimension shared by all q-operators.
/// 0 < q < 1 is the twisted regime; q = 1 is the classical limit, where
/// the Jackson integral degenerates to the Riemann integral on
/// polynomials and the twisting automorphism to the identity.
struct QContext {
	Rat q;
	int dim;

	QContext(Rat q_, int dim_) : q(std::move(q_)), dim(dim_)
	{
		if (!(Rat(0) < q && q <= Rat(1)))
			throw PreconditionError("q must satisfy 0 < q <= 1");
		if (dim < 1)
			throw PreconditionError("dimension must be positive");
	}

	bool classical() const { return q == Rat(1); }
};

/// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
Rat q_number(const QContext &ctx, int k);

/// [k]_q! = [1]_q [2]_q ... [k]_q; [0]_q! = 1.
Rat q_factorial(const QContext &ctx, int k);

/// q-difference operator: a t^k -> [k]_q a t^{k-1}.
MatPoly q_derive(const QContext &ctx, const MatPoly &f);

/// Jackson q-integral: a t^k -> a t^{k+1} / [k+1]_q. Right inverse of
/// q_derive; the constant term of the result is zero.
MatPoly jackson_integral(const QContext &ctx, const MatPoly &f);

/// Dilation M_q: a t^k -> q^k a t^k, i.e. t -> q t. Multiplicative.
MatPoly q_dilate(const QContext &ctx, const MatPoly &f);

/// Twisting automorphism Phi_q = q M_q: a t^k -> q^{k+1} a t^k.
MatPoly phi_q(const QContext &ctx, const MatPoly &f);
MatPoly phi_q_inv(const QContext &ctx, const MatPoly &f);

/// Summation operator P_q = sum_{n>0} M_q^n, which on a monomial of
/// positive degree k is multiplication by q^k/(1-q^k). The geometric
/// series diverges on a nonzero constant term, and for q = 1, so both
/// are rejected.
MatPoly p_operator(const QContext &ctx, const MatPoly &f);

/// P_hat = id + P_q, multiplication by 1/(1-q^k) on degree k >= 1.
MatPoly p_hat(const QContext &ctx, const MatPoly &f);

/// e_q(tu) = sum_n (tu)^n / [n]_q!, truncated at t-degree `order`.
MatPoly q_exp_small(const QContext &ctx, const Mat &u, int order);

/// E_q(tu) = sum_n q^{n(n-1)/2} (tu)^n / [n]_q!, truncated likewise.
/// e_q(tu) E_q(-tu) = 1 as a truncated series identity.
MatPoly q_exp_big(const QContext &ctx, const Mat &u, int order);

} // namespace qmagnus
