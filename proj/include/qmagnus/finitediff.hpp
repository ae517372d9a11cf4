#pragma once

#include <vector>

#include "qmagnus/graded.hpp"
#include "qmagnus/matrix.hpp"
#include "qmagnus/report.hpp"

namespace qmagnus {

/// Matrix-valued function on the grid {0, h, 2h, ..., Kh}.
class GridFn {
  public:
	GridFn(Rat h, int length, int dim)
	    : h_(std::move(h)), v_(static_cast<std::size_t>(length), Mat(dim))
	{
		if (!(Rat(0) < h_))
			throw PreconditionError("grid step must be positive");
		if (length < 1)
			throw PreconditionError("grid must contain at least one point");
	}

	static GridFn constant(const Rat &h, int length, const Mat &value)
	{
		GridFn f(h, length, value.dim());
		for (auto &v : f.v_)
			v = value;
		return f;
	}

	static GridFn ones(const Rat &h, int length, int dim)
	{
		return constant(h, length, Mat::identity(dim));
	}

	const Rat &h() const { return h_; }
	int length() const { return static_cast<int>(v_.size()); }
	int dim() const { return v_.front().dim(); }

	Mat &at(int j) { return v_[static_cast<std::size_t>(j)]; }
	const Mat &at(int j) const { return v_[static_cast<std::size_t>(j)]; }

	bool is_zero() const
	{
		for (const auto &v : v_)
			if (!v.is_zero())
				return false;
		return true;
	}

	GridFn truncated(int length) const
	{
		GridFn r(h_, length, dim());
		for (int j = 0; j < length; ++j)
			r.v_[static_cast<std::size_t>(j)] = at(j);
		return r;
	}

	GridFn operator-() const
	{
		GridFn r = *this;
		for (auto &v : r.v_)
			v = -v;
		return r;
	}

	GridFn &operator+=(const GridFn &o)
	{
		check(o);
		for (std::size_t j = 0; j < v_.size(); ++j)
			v_[j] += o.v_[j];
		return *this;
	}
	GridFn &operator-=(const GridFn &o) { return *this += -o; }

	friend GridFn operator+(GridFn a, const GridFn &b) { return a += b; }
	friend GridFn operator-(GridFn a, const GridFn &b) { return a -= b; }

	/// Pointwise product.
	friend GridFn operator*(const GridFn &a, const GridFn &b)
	{
		a.check(b);
		GridFn r = a;
		for (std::size_t j = 0; j < r.v_.size(); ++j)
			r.v_[j] = a.v_[j] * b.v_[j];
		return r;
	}

	friend GridFn operator*(const Rat &s, const GridFn &f)
	{
		GridFn r = f;
		for (auto &v : r.v_)
			v = s * v;
		return r;
	}

	friend bool operator==(const GridFn &a, const GridFn &b)
	{
		return a.h_ == b.h_ && a.v_ == b.v_;
	}
	friend bool operator!=(const GridFn &a, const GridFn &b)
	{
		return !(a == b);
	}

	Rat max_abs() const
	{
		Rat m(0);
		for (const auto &v : v_)
		{
			Rat x = v.max_abs();
			if (m < x)
				m = x;
		}
		return m;
	}

  private:
	Rat h_;
	std::vector<Mat> v_;

	void check(const GridFn &o) const
	{
		if (h_ != o.h_)
			throw PreconditionError("grid steps differ");
		if (v_.size() != o.v_.size())
			throw DimensionError("grid lengths differ");
		if (dim() != o.dim())
			throw DimensionError("grid value dimensions differ");
	}
};

/// Forward difference (D_h f)(jh) = (f((j+1)h) - f(jh)) / h; the result
/// is one point shorter. Satisfies the modified Leibniz rule
/// D_h(fg) = D_h f . g + f . D_h g + h D_h f . D_h g.
GridFn diff_h(const GridFn &f);

/// Summation operator (S_h f)(jh) = h (f(0) + ... + f((j-1)h)), with
/// (S_h f)(0) = 0. Right inverse of D_h; S_h D_h f = f - f(0) on the
/// grid. Rota-Baxter of weight h.
GridFn sum_h(const GridFn &f);

/// Checks S_h(f S_h g + S_h f g + h f g) = S_h f . S_h g at every grid
/// point.
LawReport rb_check_h(const GridFn &f, const GridFn &g);

/// Solves F = 1 + S_h(F U) by forward recursion:
/// F(0) = 1, F((j+1)h) = F(jh)(1 + h U(jh)). Equivalent to D_h F = F U
/// with F(0) = 1.
GridFn solve_fd(const GridFn &U);

/// The same solution through the graded dendriform formulation
/// X = 1 + X > U with f > g = S_h(f) g: the series terminates on a
/// finite grid, and F = 1 + S_h(X - 1) collapsed at lambda = 1.
GridFn solve_fd_dendriform(const GridFn &U);

/// Ordinary dendriform structure of the summation operator:
/// f < g = f S_h(g) + h f g, f > g = S_h(f) g, Phi = id.
AlgebraOps<GridFn> h_algebra_ops(const Rat &h, int length, int dim);

} // namespace qmagnus
