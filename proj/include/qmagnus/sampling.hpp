#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "qmagnus/matpoly.hpp"

namespace qmagnus {

/// Deterministic sample source for property checks. Matrix entries are
/// drawn from {-3..3}: the laws under test are multilinear, so small
/// integer samples witness them as strongly as generic ones.
class Sampler {
  public:
	explicit Sampler(std::uint64_t seed) : rng_(seed) {}

	int int_in(int lo, int hi)
	{
		return std::uniform_int_distribution<int>(lo, hi)(rng_);
	}

	Rat small_rat() { return Rat(int_in(-3, 3)); }

	Mat mat(int dim)
	{
		Mat m(dim);
		for (int i = 0; i < dim; ++i)
			for (int j = 0; j < dim; ++j)
				m.at(i, j) = small_rat();
		return m;
	}

	Mat nonzero_mat(int dim)
	{
		for (;;)
		{
			Mat m = mat(dim);
			if (!m.is_zero())
				return m;
		}
	}

	MatPoly poly(int dim, int max_degree)
	{
		MatPoly p(dim);
		for (int k = 0; k <= max_degree; ++k)
			p.set_coeff(k, mat(dim));
		return p;
	}

	MatPoly poly_zero_const(int dim, int max_degree)
	{
		MatPoly p = poly(dim, max_degree);
		p.set_coeff(0, Mat(dim));
		return p;
	}

	/// Pair of classically commuting matrices: both are polynomials in a
	/// common matrix.
	std::pair<Mat, Mat> commuting_pair(int dim)
	{
		Mat m = mat(dim);
		Mat a = Rat(int_in(-2, 2)) * Mat::identity(dim) + Rat(int_in(-2, 2)) * m;
		Mat b = Rat(int_in(-2, 2)) * Mat::identity(dim) + Rat(int_in(-2, 2)) * m;
		return {a, b};
	}

	/// Polynomial whose coefficient matrices pairwise commute.
	MatPoly commuting_poly(int dim, int max_degree)
	{
		Mat m = mat(dim);
		MatPoly p(dim);
		for (int k = 0; k <= max_degree; ++k)
			p.set_coeff(k, Rat(int_in(-2, 2)) * Mat::identity(dim) +
			                   Rat(int_in(-2, 2)) * m);
		return p;
	}

	std::pair<Mat, Mat> noncommuting_pair(int dim)
	{
		for (;;)
		{
			Mat a = mat(dim), b = mat(dim);
			if (!commute(a, b))
				return {a, b};
		}
	}

  private:
	std::mt19937_64 rng_;
};

} // namespace qmagnus
