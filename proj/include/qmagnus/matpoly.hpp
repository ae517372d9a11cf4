#pragma once

#include <map>

#include "qmagnus/matrix.hpp"

namespace qmagnus {

/// Polynomial in t with square-matrix coefficients. Zero coefficients are
/// never stored, so equality is structural.
class MatPoly {
  public:
	explicit MatPoly(int dim) : dim_(dim)
	{
		if (dim < 1)
			throw DimensionError("polynomial dimension must be positive");
	}

	static MatPoly constant(const Mat &a) { return monomial(0, a); }

	static MatPoly monomial(int degree, const Mat &coeff)
	{
		if (degree < 0)
			throw PreconditionError("negative monomial degree");
		MatPoly p(coeff.dim());
		if (!coeff.is_zero())
			p.c_.emplace(degree, coeff);
		return p;
	}

	/// The constant function 1 (identity matrix), the unit of the
	/// pointwise product.
	static MatPoly one(int dim) { return constant(Mat::identity(dim)); }

	/// The identity function t, as t times the identity matrix.
	static MatPoly iota(int dim) { return monomial(1, Mat::identity(dim)); }

	int dim() const { return dim_; }
	bool is_zero() const { return c_.empty(); }
	int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

	const std::map<int, Mat> &coeffs() const { return c_; }

	Mat coeff(int k) const
	{
		auto it = c_.find(k);
		return it == c_.end() ? Mat(dim_) : it->second;
	}

	void set_coeff(int k, const Mat &a)
	{
		if (a.dim() != dim_)
			throw DimensionError("coefficient dimension mismatch");
		if (a.is_zero())
			c_.erase(k);
		else
			c_.insert_or_assign(k, a);
	}

	MatPoly operator-() const
	{
		MatPoly r(dim_);
		for (const auto &[k, a] : c_)
			r.c_.emplace(k, -a);
		return r;
	}

	MatPoly &operator+=(const MatPoly &o)
	{
		check_dim(o);
		for (const auto &[k, a] : o.c_)
		{
			auto it = c_.find(k);
			if (it == c_.end())
				c_.emplace(k, a);
			else
			{
				it->second += a;
				if (it->second.is_zero())
					c_.erase(it);
			}
		}
		return *this;
	}
	MatPoly &operator-=(const MatPoly &o) { return *this += -o; }

	friend MatPoly operator+(MatPoly a, const MatPoly &b) { return a += b; }
	friend MatPoly operator-(MatPoly a, const MatPoly &b) { return a -= b; }

	/// Cauchy product; matrix factors keep their order.
	friend MatPoly operator*(const MatPoly &a, const MatPoly &b)
	{
		a.check_dim(b);
		MatPoly r(a.dim_);
		for (const auto &[i, p] : a.c_)
			for (const auto &[j, q] : b.c_)
			{
				Mat prod = p * q;
				if (prod.is_zero())
					continue;
				auto it = r.c_.find(i + j);
				if (it == r.c_.end())
					r.c_.emplace(i + j, std::move(prod));
				else
				{
					it->second += prod;
					if (it->second.is_zero())
						r.c_.erase(it);
				}
			}
		return r;
	}

	friend MatPoly operator*(const Rat &s, const MatPoly &p)
	{
		MatPoly r(p.dim_);
		if (s.is_zero())
			return r;
		for (const auto &[k, a] : p.c_)
			r.c_.emplace(k, s * a);
		return r;
	}

	friend bool operator==(const MatPoly &a, const MatPoly &b)
	{
		return a.dim_ == b.dim_ && a.c_ == b.c_;
	}
	friend bool operator!=(const MatPoly &a, const MatPoly &b)
	{
		return !(a == b);
	}

	MatPoly truncated(int max_degree) const
	{
		MatPoly r(dim_);
		for (const auto &[k, a] : c_)
			if (k <= max_degree)
				r.c_.emplace(k, a);
		return r;
	}

	Mat eval(const Rat &t) const
	{
		Mat r(dim_);
		for (const auto &[k, a] : c_)
			r += rat_pow(t, k) * a;
		return r;
	}

	Rat max_abs() const
	{
		Rat m(0);
		for (const auto &[k, a] : c_)
		{
			Rat v = a.max_abs();
			if (m < v)
				m = v;
		}
		return m;
	}

  private:
	int dim_;
	std::map<int, Mat> c_;

	void check_dim(const MatPoly &o) const
	{
		if (dim_ != o.dim_)
			throw DimensionError("polynomial dimension mismatch");
	}
};

} // namespace qmagnus
