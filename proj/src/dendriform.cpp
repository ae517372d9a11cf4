#include "qmagnus/dendriform.hpp"

namespace qmagnus {

TwistedDendAlgebra q_dend_algebra(const QContext &ctx)
{
	MatPoly zero(ctx.dim);
	return AlgebraOps<MatPoly>::dendriform(
	    zero, MatPoly::one(ctx.dim),
	    [ctx](const MatPoly &f, const MatPoly &g) {
		    return f * jackson_integral(ctx, g);
	    },
	    [ctx](const MatPoly &f, const MatPoly &g) {
		    return jackson_integral(ctx, f) * g;
	    },
	    [ctx](const MatPoly &f) { return phi_q(ctx, f); },
	    [ctx](const MatPoly &f) { return phi_q_inv(ctx, f); },
	    [](const MatPoly &f, const MatPoly &g) { return f * g; });
}

MatPoly dend_prec(const QContext &ctx, const MatPoly &f, const MatPoly &g)
{
	return f * jackson_integral(ctx, g);
}

MatPoly dend_succ(const QContext &ctx, const MatPoly &f, const MatPoly &g)
{
	return jackson_integral(ctx, f) * g;
}

MatPoly dend_assoc(const QContext &ctx, const MatPoly &f, const MatPoly &g)
{
	return jackson_integral(ctx, f) * g +
	       f * q_dilate(ctx, jackson_integral(ctx, g));
}

MatPoly pre_lie(const QContext &ctx, const MatPoly &f, const MatPoly &g)
{
	return dend_succ(ctx, f, g) - dend_prec(ctx, g, phi_q(ctx, f));
}

MatPoly pre_lie_right(const QContext &ctx, const MatPoly &f, const MatPoly &g)
{
	return dend_prec(ctx, f, phi_q(ctx, g)) - dend_succ(ctx, g, f);
}

MatPoly nfold_prelie_commuting(const QContext &ctx, const MatPoly &P, int n)
{
	if (n < 1)
		throw PreconditionError("fold count must be positive");
	std::vector<Mat> coeffs;
	for (const auto &[k, a] : P.coeffs())
		coeffs.push_back(a);
	for (std::size_t i = 0; i < coeffs.size(); ++i)
		for (std::size_t j = i + 1; j < coeffs.size(); ++j)
			if (!commute(coeffs[i], coeffs[j]))
				throw PreconditionError(
				    "coefficient matrices must pairwise commute");

	MatPoly r = P;
	for (int k = 1; k < n; ++k)
		r = pre_lie(ctx, P, r);

	// (1-q)^{n-1} P(t)^n t^{n-1}
	MatPoly closed = MatPoly::one(P.dim());
	for (int k = 0; k < n; ++k)
		closed = closed * P;
	closed = rat_pow(Rat(1) - ctx.q, n - 1) *
	         (closed * MatPoly::monomial(n - 1, Mat::identity(P.dim())));
	if (r != closed)
		throw ArithmeticError(
		    "n-fold pre-Lie power disagrees with its closed form");
	return r;
}

namespace {

// Enumerates k_0..k_N >= 0 with sum n and weighted sum m, accumulating
// multinomial(n; k) * a_0^{k_0} ... a_N^{k_N}.
void accumulate_terms(const std::vector<Mat> &a, int idx, int rem_n,
                      int rem_m, const Rat &multi, const Mat &partial,
                      Mat &out)
{
	const int N = static_cast<int>(a.size()) - 1;
	if (idx > N)
	{
		if (rem_n == 0 && rem_m == 0)
			out += multi * partial;
		return;
	}
	for (int k = 0; k <= rem_n; ++k)
	{
		if (idx * k > rem_m)
			break;
		Rat c = multi;
		// multinomial factor contributed by choosing k copies at idx:
		// n! / prod k_i! built incrementally as C(rem_n, k) at each level.
		c *= binomial(rem_n, k);
		Mat p = partial;
		for (int i = 0; i < k; ++i)
			p = p * a[static_cast<std::size_t>(idx)];
		accumulate_terms(a, idx + 1, rem_n - k, rem_m - idx * k, c, p, out);
	}
}

} // namespace

Mat nfold_coefficient(const QContext &ctx, const std::vector<Mat> &coeffs,
                      int m, int n)
{
	if (coeffs.empty())
		throw PreconditionError("empty coefficient list");
	const int dim = coeffs.front().dim();
	Mat out(dim);
	accumulate_terms(coeffs, 0, n, m, Rat(1), Mat::identity(dim), out);
	return rat_pow(Rat(1) - ctx.q, n - 1) * out;
}

} // namespace qmagnus
