#pragma once

#include "qmagnus/bernoulli.hpp"
#include "qmagnus/graded.hpp"
#include "qmagnus/matpoly.hpp"
#include "qmagnus/qcalc.hpp"
#include "qmagnus/report.hpp"

namespace qmagnus {

// ---------------------------------------------------------------------
// Generic machinery over any (twisted) dendriform carrier.
// ---------------------------------------------------------------------

/// W(a) = e^{L(a)} 1 - 1 = sum_{k>=1} L(a)^{k-1}(a) / k!
///      = a + 1/2 a|>a + 1/6 a|>(a|>a) + ...
/// where L(a) is left pre-Lie multiplication. Inverse of omega_prime.
template <class C>
Graded<C> w_map(const AlgebraOps<C> &ops, const Graded<C> &a)
{
	if (!a.proper())
		throw PreconditionError("w_map requires grade 0 to vanish");
	const int N = a.order();
	Graded<C> r(N, ops.zero);
	Graded<C> term = a; // L(a)^{k-1}(a)
	r += term;
	for (int k = 2; k <= N; ++k)
	{
		term = graded_mul(a, term, DendOp::prelie, ops);
		r += factorial(k).inv() * term;
	}
	return r;
}

/// The Bernoulli-weighted pre-Lie fixed point
///     Omega' = sum_{m>=0} B_m/m! L(Omega')^m (u),
/// solved grade by grade: grade n of the right-hand side only involves
/// grades < n of Omega', so termination is structural, no iteration
/// tolerance enters. Inverse of w_map on proper series.
template <class C>
Graded<C> omega_prime(const AlgebraOps<C> &ops, const Graded<C> &u)
{
	if (!u.proper())
		throw PreconditionError("omega_prime requires grade 0 to vanish");
	const int N = u.order();
	Graded<C> omega(N, ops.zero);
	for (int n = 1; n <= N; ++n)
	{
		C acc = u.grade(n);
		Graded<C> cur = u;
		for (int m = 1; m < n; ++m)
		{
			cur = graded_mul(omega, cur, DendOp::prelie, ops);
			acc = acc + (bernoulli(m) / factorial(m)) * cur.grade(n);
		}
		omega.set_grade(n, acc);
	}
	return omega;
}

/// Same fixed point written with right multiplications,
///     Omega' = sum_{m>=0} (-1)^m B_m/m! R(Omega')^m (u),
/// where R(b)(x) = x <| b. Agrees with omega_prime since L(b) = -R(b).
template <class C>
Graded<C> omega_prime_adjoint(const AlgebraOps<C> &ops, const Graded<C> &u)
{
	if (!u.proper())
		throw PreconditionError("omega_prime requires grade 0 to vanish");
	const int N = u.order();
	Graded<C> omega(N, ops.zero);
	for (int n = 1; n <= N; ++n)
	{
		C acc = u.grade(n);
		Graded<C> cur = u;
		Rat sign(1);
		for (int m = 1; m < n; ++m)
		{
			cur = graded_mul(cur, omega, DendOp::prelie_right, ops);
			sign = -sign;
			acc = acc + (sign * bernoulli(m) / factorial(m)) * cur.grade(n);
		}
		omega.set_grade(n, acc);
	}
	return omega;
}

/// exp*(x) = 1 + sum_{n>=1} x^{*n}/n! in the dendriform associative
/// product; x must be proper, the result has unit coefficient 1.
template <class C>
Graded<C> exp_star(const AlgebraOps<C> &ops, const Graded<C> &x)
{
	if (!x.proper())
		throw PreconditionError("exp_star requires grade 0 to vanish");
	const int N = x.order();
	Graded<C> r(N, ops.zero);
	r.set_unit(Rat(1));
	Graded<C> pw = x;
	r += pw;
	for (int n = 2; n <= N; ++n)
	{
		pw = graded_mul(pw, x, DendOp::assoc, ops);
		r += factorial(n).inv() * pw;
	}
	return r;
}

/// log*(1 + x) = sum_{n>=1} (-1)^{n-1} x^{*n}/n; the input must have
/// unit coefficient exactly 1 and zero grade 0.
template <class C>
Graded<C> log_star(const AlgebraOps<C> &ops, const Graded<C> &s)
{
	if (s.unit() != Rat(1) || !s.grade(0).is_zero())
		throw PreconditionError("log_star requires a series of the form 1 + x");
	const int N = s.order();
	Graded<C> x = s;
	x.set_unit(Rat(0));
	Graded<C> r = x;
	Graded<C> pw = x;
	Rat sign(1);
	for (int n = 2; n <= N; ++n)
	{
		pw = graded_mul(pw, x, DendOp::assoc, ops);
		sign = -sign;
		r += (sign / Rat(n)) * pw;
	}
	return r;
}

/// Pointwise exponential sum x^n/n! in the carrier product; grade 0 of
/// the result is the carrier unit.
template <class C>
Graded<C> exp_pointwise(const AlgebraOps<C> &ops, const Graded<C> &x)
{
	if (!x.proper())
		throw PreconditionError("exp_pointwise requires grade 0 to vanish");
	const int N = x.order();
	Graded<C> r(N, ops.zero);
	r.set_grade(0, ops.one);
	Graded<C> pw = x;
	r += pw;
	for (int n = 2; n <= N; ++n)
	{
		pw = graded_mul(pw, x, DendOp::pointwise, ops);
		r += factorial(n).inv() * pw;
	}
	return r;
}

/// q-exponential sum x^n/[n]_q! in the carrier product.
template <class C>
Graded<C> q_exp_graded(const AlgebraOps<C> &ops, const Graded<C> &x,
                       const Rat &q)
{
	if (!x.proper())
		throw PreconditionError("q_exp_graded requires grade 0 to vanish");
	const int N = x.order();
	QContext qc(q, 1);
	Graded<C> r(N, ops.zero);
	r.set_grade(0, ops.one);
	Graded<C> pw = x;
	r += pw;
	for (int n = 2; n <= N; ++n)
	{
		pw = graded_mul(pw, x, DendOp::pointwise, ops);
		r += q_factorial(qc, n).inv() * pw;
	}
	return r;
}

/// Compositional inverse of q_exp_graded: the unique proper z with
/// q_exp_graded(z) = s, solved degree by degree. Grade 0 of s must be
/// the carrier unit.
template <class C>
Graded<C> q_log_graded(const AlgebraOps<C> &ops, const Graded<C> &s,
                       const Rat &q)
{
	if (!s.unit().is_zero() || !(s.grade(0) == ops.one))
		throw PreconditionError("q_log_graded requires grade 0 equal to one");
	const int N = s.order();
	QContext qc(q, 1);
	Graded<C> z(N, ops.zero);
	for (int d = 1; d <= N; ++d)
	{
		C acc = s.grade(d);
		Graded<C> pw = z; // grades < d of z are final, grade d is still zero
		for (int k = 2; k <= d; ++k)
		{
			pw = graded_mul(pw, z, DendOp::pointwise, ops);
			acc = acc - (q_factorial(qc, k).inv() * pw.grade(d));
		}
		z.set_grade(d, acc);
	}
	return z;
}

template <class C> struct DendSolutions {
	Graded<C> X, Y;
};

/// Grade-by-grade solutions of the two linear dendriform equations
///     X = 1 + lambda a < Phi(X),   Y = 1 - Y > lambda a,
/// so that X = 1 + lambda a + lambda^2 a<Phi(a) + ... and
/// Y = 1 - lambda a + lambda^2 a>a - ...; Y *_q X = 1.
template <class C>
DendSolutions<C> solve_dend_pair(const AlgebraOps<C> &ops, const C &a,
                                 int order)
{
	Graded<C> X(order, ops.zero), Y(order, ops.zero);
	X.set_unit(Rat(1));
	Y.set_unit(Rat(1));
	if (order >= 1)
	{
		X.set_grade(1, a); // a < Phi(1) = a < 1 = a
		Y.set_grade(1, -a); // 1 > a = a
	}
	for (int n = 2; n <= order; ++n)
	{
		X.set_grade(n, ops.prec(a, ops.phi(X.grade(n - 1))));
		Y.set_grade(n, -ops.succ(Y.grade(n - 1), a));
	}
	return {std::move(X), std::move(Y)};
}

/// Group law transported from BCH by W: a # b = a + e^{L(Omega'(a))} b.
template <class C>
Graded<C> sharp(const AlgebraOps<C> &ops, const Graded<C> &a,
                const Graded<C> &b)
{
	if (!a.proper() || !b.proper())
		throw PreconditionError("sharp requires proper series");
	const Graded<C> omega = omega_prime(ops, a);
	Graded<C> r = a + b;
	Graded<C> term = b;
	for (int k = 1; k <= a.order(); ++k)
	{
		term = graded_mul(omega, term, DendOp::prelie, ops);
		r += factorial(k).inv() * term;
	}
	return r;
}

/// Inverse for #: a^{#-1} = e^{-L(Omega'(a))} 1 - 1, so that
/// a # a^{#-1} = 0.
template <class C>
Graded<C> sharp_inverse(const AlgebraOps<C> &ops, const Graded<C> &a)
{
	if (!a.proper())
		throw PreconditionError("sharp_inverse requires a proper series");
	const Graded<C> omega = omega_prime(ops, a);
	const int N = a.order();
	Graded<C> r(N, ops.zero);
	Graded<C> term = omega;
	Rat sign(-1);
	r += sign * term;
	for (int k = 2; k <= N; ++k)
	{
		term = graded_mul(omega, term, DendOp::prelie, ops);
		sign = -sign;
		r += (sign * factorial(k).inv()) * term;
	}
	return r;
}

/// BCH(x, y) = log*(exp*(x) * exp*(y)) in the dendriform associative
/// product; first terms x + y + 1/2 [x,y] + ...
template <class C>
Graded<C> bch_classical(const AlgebraOps<C> &ops, const Graded<C> &x,
                        const Graded<C> &y)
{
	Graded<C> prod =
	    graded_mul(exp_star(ops, x), exp_star(ops, y), DendOp::assoc, ops);
	return log_star(ops, prod);
}

// ---------------------------------------------------------------------
// The q-instance on matrix polynomials.
// ---------------------------------------------------------------------

using LamSeries = Graded<MatPoly>;

/// Dendriform operations induced by the Jackson integral:
/// f < g = f I_q(g), f > g = I_q(f) g, twisting Phi_q = q M_q,
/// pointwise product of the carrier as `mul`.
AlgebraOps<MatPoly> q_algebra_ops(const QContext &ctx);

struct MagnusConfig {
	QContext ctx;
	int order;
	MatPoly input;

	MagnusConfig(QContext c, int n, MatPoly a)
	    : ctx(std::move(c)), order(n), input(std::move(a))
	{
		if (order < 1)
			throw PreconditionError("truncation order must be >= 1");
		if (input.dim() != ctx.dim)
			throw DimensionError("input dimension differs from context");
	}
};

struct QMagnusSolution {
	LamSeries X, Y;          // dendriform solutions, unit coefficient 1
	LamSeries Xhat, Yhat;    // I_q images, with I_q(1) := 1_A
	LamSeries omega;         // Omega'_q(lambda a)
	LamSeries omega_q;       // Omega_q = I_q(Omega'_q), gradewise
};

/// Solves Y = 1 - Y > lambda a and X = 1 + lambda a < Phi(X), forms the
/// q-integral images Yhat = I_q(Y) (solving Yhat = 1 - lambda I_q(Yhat a))
/// and Xhat = I_q(X) (solving Xhat = 1 + lambda q^{-1} I_q(a Phi(Xhat))),
/// and the expansions Omega'_q, Omega_q with exp*(Omega') = X.
QMagnusSolution q_magnus_solution(const MagnusConfig &cfg);

/// Closed form for constant input: grade n = (q-1)^{n-1} t^{n-1} a^n / n.
LamSeries omega_prime_closed_form(const QContext &ctx, const Mat &a,
                                  int order);

/// Closed form for constant input: grade n = (q-1)^{n-1} t^n a^n / (n [n]_q).
LamSeries omega_q_closed_form(const QContext &ctx, const Mat &a, int order);

/// e_q(lambda a t) and E_q(lambda a t) as graded series, grade n carrying
/// the t^n coefficient.
LamSeries q_exp_small_graded(const QContext &ctx, const Mat &a, int order);
LamSeries q_exp_big_graded(const QContext &ctx, const Mat &a, int order);

/// Compares the truncated infinite product
///     prod_{n=0}^{K-1} (1 + (1-q) q^n t0 U)
/// against the order-`order` series E_q(t0 U) at the sample point t0,
/// both in exact arithmetic, and checks the two-sided solution identity
/// e_q(-tU) E_q(tU) = 1 as a truncated series. Requires q < 1.
CheckReport q_difference_check(const QContext &ctx, const Mat &U,
                               const Rat &t0, int factors, int order);

/// Verifies e_q(at) e_q(bt) = exp(-Omega_q(-b # -a)) to the joint
/// truncation order; for classically commuting a, b additionally checks
/// -b # -a = -(a + b - (1-q) ab iota) as a two-grade series.
CheckReport q_bch_transfer_check(const QContext &ctx, const Mat &a,
                                 const Mat &b, int order);

} // namespace qmagnus
