#include "qmagnus/qcalc.hpp"

namespace qmagnus {

Rat q_number(const QContext &ctx, int k)
{
	if (k < 0)
		throw PreconditionError("q-number index must be non-negative");
	Rat s(0), p(1);
	for (int i = 0; i < k; ++i)
	{
		s += p;
		p *= ctx.q;
	}
	return s;
}

Rat q_factorial(const QContext &ctx, int k)
{
	if (k < 0)
		throw PreconditionError("q-factorial index must be non-negative");
	Rat r(1);
	for (int i = 1; i <= k; ++i)
		r *= q_number(ctx, i);
	return r;
}

MatPoly q_derive(const QContext &ctx, const MatPoly &f)
{
	MatPoly r(f.dim());
	for (const auto &[k, a] : f.coeffs())
		if (k >= 1)
			r.set_coeff(k - 1, q_number(ctx, k) * a);
	return r;
}

MatPoly jackson_integral(const QContext &ctx, const MatPoly &f)
{
	MatPoly r(f.dim());
	for (const auto &[k, a] : f.coeffs())
		r.set_coeff(k + 1, q_number(ctx, k + 1).inv() * a);
	return r;
}

MatPoly q_dilate(const QContext &ctx, const MatPoly &f)
{
	MatPoly r(f.dim());
	for (const auto &[k, a] : f.coeffs())
		r.set_coeff(k, rat_pow(ctx.q, k) * a);
	return r;
}

MatPoly phi_q(const QContext &ctx, const MatPoly &f)
{
	MatPoly r(f.dim());
	for (const auto &[k, a] : f.coeffs())
		r.set_coeff(k, rat_pow(ctx.q, k + 1) * a);
	return r;
}

MatPoly phi_q_inv(const QContext &ctx, const MatPoly &f)
{
	MatPoly r(f.dim());
	for (const auto &[k, a] : f.coeffs())
		r.set_coeff(k, rat_pow(ctx.q, -(k + 1)) * a);
	return r;
}

MatPoly p_operator(const QContext &ctx, const MatPoly &f)
{
	if (ctx.classical())
		throw DivergenceError("summation operator requires q < 1");
	if (!f.coeff(0).is_zero())
		throw DivergenceError(
		    "summation operator diverges on a nonzero constant term");
	MatPoly r(f.dim());
	for (const auto &[k, a] : f.coeffs())
	{
		Rat qk = rat_pow(ctx.q, k);
		r.set_coeff(k, (qk / (Rat(1) - qk)) * a);
	}
	return r;
}

MatPoly p_hat(const QContext &ctx, const MatPoly &f)
{
	return f + p_operator(ctx, f);
}

MatPoly q_exp_small(const QContext &ctx, const Mat &u, int order)
{
	MatPoly r(u.dim());
	Mat p = Mat::identity(u.dim());
	r.set_coeff(0, p);
	for (int n = 1; n <= order; ++n)
	{
		p = p * u;
		r.set_coeff(n, q_factorial(ctx, n).inv() * p);
	}
	return r;
}

MatPoly q_exp_big(const QContext &ctx, const Mat &u, int order)
{
	MatPoly r(u.dim());
	Mat p = Mat::identity(u.dim());
	r.set_coeff(0, p);
	for (int n = 1; n <= order; ++n)
	{
		p = p * u;
		Rat c = rat_pow(ctx.q, static_cast<long long>(n) * (n - 1) / 2) /
		        q_factorial(ctx, n);
		r.set_coeff(n, c * p);
	}
	return r;
}

} // namespace qmagnus
