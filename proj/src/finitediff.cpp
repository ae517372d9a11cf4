#include "qmagnus/finitediff.hpp"

#include "qmagnus/json_io.hpp"

namespace qmagnus {

GridFn diff_h(const GridFn &f)
{
	if (f.length() < 2)
		throw PreconditionError("difference needs at least two grid points");
	GridFn r(f.h(), f.length() - 1, f.dim());
	Rat hinv = f.h().inv();
	for (int j = 0; j + 1 < f.length(); ++j)
		r.at(j) = hinv * (f.at(j + 1) - f.at(j));
	return r;
}

GridFn sum_h(const GridFn &f)
{
	GridFn r(f.h(), f.length(), f.dim());
	Mat acc(f.dim());
	for (int j = 1; j < f.length(); ++j)
	{
		acc += f.at(j - 1);
		r.at(j) = f.h() * acc;
	}
	return r;
}

LawReport rb_check_h(const GridFn &f, const GridFn &g)
{
	LawReport rep;
	rep.name = "weight-h-rota-baxter";
	rep.samples = 1;
	GridFn lhs = sum_h(f * sum_h(g) + sum_h(f) * g + f.h() * (f * g));
	GridFn rhs = sum_h(f) * sum_h(g);
	if (lhs != rhs)
		rep.failures.push_back({{"inputs", {to_json(f), to_json(g)}},
		                        {"lhs", to_json(lhs)},
		                        {"rhs", to_json(rhs)}});
	return rep;
}

GridFn solve_fd(const GridFn &U)
{
	GridFn F(U.h(), U.length(), U.dim());
	F.at(0) = Mat::identity(U.dim());
	for (int j = 0; j + 1 < U.length(); ++j)
		F.at(j + 1) = F.at(j) * (Mat::identity(U.dim()) + U.h() * U.at(j));
	return F;
}

AlgebraOps<GridFn> h_algebra_ops(const Rat &h, int length, int dim)
{
	GridFn zero(h, length, dim);
	return AlgebraOps<GridFn>::dendriform(
	    zero, GridFn::ones(h, length, dim),
	    [](const GridFn &f, const GridFn &g) {
		    return f * sum_h(g) + f.h() * (f * g);
	    },
	    [](const GridFn &f, const GridFn &g) { return sum_h(f) * g; },
	    [](const GridFn &f) { return f; }, [](const GridFn &f) { return f; },
	    [](const GridFn &f, const GridFn &g) { return f * g; });
}

GridFn solve_fd_dendriform(const GridFn &U)
{
	const auto ops = h_algebra_ops(U.h(), U.length(), U.dim());

	// x_n = x_{n-1} > U with x_0 = 1 (so x_1 = 1 > U = U); each > nests
	// one more S_h, which is strictly lower triangular on the grid, so
	// x_n vanishes once n exceeds the number of points.
	const int order = U.length();
	Graded<GridFn> X(order, ops.zero);
	X.set_unit(Rat(1));
	if (order >= 1)
		X.set_grade(1, U);
	for (int n = 2; n <= order; ++n)
		X.set_grade(n, ops.succ(X.grade(n - 1), U));

	Graded<GridFn> tail = X;
	tail.set_unit(Rat(0));
	return GridFn::ones(U.h(), U.length(), U.dim()) + sum_h(tail.collapse());
}

} // namespace qmagnus
