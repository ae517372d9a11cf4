#pragma once

#include <vector>

#include "qmagnus/rational.hpp"

namespace qmagnus {

/// Square matrix over Rat, row-major.
class Mat {
  public:
	explicit Mat(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim)
	{
		if (dim < 1)
			throw DimensionError("matrix dimension must be positive");
	}

	static Mat identity(int dim)
	{
		Mat m(dim);
		for (int i = 0; i < dim; ++i)
			m.at(i, i) = Rat(1);
		return m;
	}

	int dim() const { return dim_; }

	Rat &at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
	const Rat &at(int i, int j) const
	{
		return a_[static_cast<std::size_t>(i) * dim_ + j];
	}

	bool is_zero() const
	{
		for (const auto &x : a_)
			if (!x.is_zero())
				return false;
		return true;
	}

	Mat operator-() const
	{
		Mat r(dim_);
		for (std::size_t i = 0; i < a_.size(); ++i)
			r.a_[i] = -a_[i];
		return r;
	}

	Mat &operator+=(const Mat &o)
	{
		check_dim(o);
		for (std::size_t i = 0; i < a_.size(); ++i)
			a_[i] += o.a_[i];
		return *this;
	}
	Mat &operator-=(const Mat &o)
	{
		check_dim(o);
		for (std::size_t i = 0; i < a_.size(); ++i)
			a_[i] -= o.a_[i];
		return *this;
	}

	friend Mat operator+(Mat a, const Mat &b) { return a += b; }
	friend Mat operator-(Mat a, const Mat &b) { return a -= b; }

	friend Mat operator*(const Mat &a, const Mat &b)
	{
		a.check_dim(b);
		Mat r(a.dim_);
		for (int i = 0; i < a.dim_; ++i)
			for (int k = 0; k < a.dim_; ++k)
			{
				const Rat &aik = a.at(i, k);
				if (aik.is_zero())
					continue;
				for (int j = 0; j < a.dim_; ++j)
					r.at(i, j) += aik * b.at(k, j);
			}
		return r;
	}

	friend Mat operator*(const Rat &s, const Mat &m)
	{
		Mat r(m.dim_);
		for (std::size_t i = 0; i < m.a_.size(); ++i)
			r.a_[i] = s * m.a_[i];
		return r;
	}

	friend bool operator==(const Mat &a, const Mat &b)
	{
		return a.dim_ == b.dim_ && a.a_ == b.a_;
	}
	friend bool operator!=(const Mat &a, const Mat &b) { return !(a == b); }

	Rat max_abs() const
	{
		Rat m(0);
		for (const auto &x : a_)
		{
			Rat v = x.abs();
			if (m < v)
				m = v;
		}
		return m;
	}

  private:
	int dim_;
	std::vector<Rat> a_;

	void check_dim(const Mat &o) const
	{
		if (dim_ != o.dim_)
			throw DimensionError("matrix dimension mismatch");
	}
};

inline Mat commutator(const Mat &a, const Mat &b) { return a * b - b * a; }

inline bool commute(const Mat &a, const Mat &b) { return a * b == b * a; }

inline Mat mat_pow(const Mat &a, int e)
{
	Mat r = Mat::identity(a.dim());
	for (int i = 0; i < e; ++i)
		r = r * a;
	return r;
}

} // namespace qmagnus
