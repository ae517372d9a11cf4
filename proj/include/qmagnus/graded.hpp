#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qmagnus/rational.hpp"

namespace qmagnus {

/// Operation bundle for a (possibly twisted) dendriform algebra on a
/// carrier C. `mul` is the pointwise associative product of the carrier
/// itself; `assoc` is the dendriform composite x*y = x>y + x<Phi(y),
/// which is a different associative product. Purely associative carriers
/// (e.g. the free algebra) set only `mul`/`assoc` and leave the rest
/// empty.
///
/// Required from C: + - unary-, operator*(Rat, C), ==, is_zero().
template <class C> struct AlgebraOps {
	C zero, one; // one = unit of `mul`, not the adjoined dendriform unit
	std::function<C(const C &, const C &)> prec, succ, assoc, mul;
	std::function<C(const C &)> phi, phi_inv;

	AlgebraOps(C zero_, C one_) : zero(std::move(zero_)), one(std::move(one_))
	{
	}

	static AlgebraOps dendriform(C zero, C one,
	                             std::function<C(const C &, const C &)> prec,
	                             std::function<C(const C &, const C &)> succ,
	                             std::function<C(const C &)> phi,
	                             std::function<C(const C &)> phi_inv,
	                             std::function<C(const C &, const C &)> mul)
	{
		AlgebraOps ops(std::move(zero), std::move(one));
		ops.prec = std::move(prec);
		ops.succ = std::move(succ);
		ops.phi = std::move(phi);
		ops.phi_inv = std::move(phi_inv);
		ops.mul = std::move(mul);
		ops.assoc = [p = ops.prec, s = ops.succ, f = ops.phi](const C &x,
		                                                      const C &y) {
			return s(x, y) + p(x, f(y));
		};
		return ops;
	}

	static AlgebraOps associative(C zero, C one,
	                              std::function<C(const C &, const C &)> mul)
	{
		AlgebraOps ops(std::move(zero), std::move(one));
		ops.mul = mul;
		ops.assoc = std::move(mul);
		return ops;
	}

	/// Left pre-Lie product x |> y = x > y - y < Phi(x).
	C prelie(const C &x, const C &y) const
	{
		return succ(x, y) - prec(y, phi(x));
	}

	/// Right pre-Lie product x <| y = x < Phi(y) - y > x = -(y |> x).
	C prelie_right(const C &x, const C &y) const
	{
		return prec(x, phi(y)) - succ(y, x);
	}
};

enum class DendOp { prec, succ, assoc, prelie, prelie_right, pointwise };

/// Truncated series sum_{n=0..N} lambda^n c_n plus an optional multiple
/// of the adjoined dendriform unit at grade 0. The unit coefficient and
/// the grade-0 carrier element are kept apart: the adjoined unit is not
/// an element of the carrier (in particular it is not the constant
/// function 1).
template <class C> class Graded {
  public:
	Graded(int order, const C &zero)
	    : order_(order), unit_(0), g_(static_cast<std::size_t>(order) + 1, zero)
	{
		if (order < 0)
			throw PreconditionError("negative truncation order");
	}

	/// `a` placed at the given grade, all else zero.
	static Graded embed(const C &a, int grade, int order, const C &zero)
	{
		Graded s(order, zero);
		s.set_grade(grade, a);
		return s;
	}

	int order() const { return order_; }

	const Rat &unit() const { return unit_; }
	void set_unit(Rat u) { unit_ = std::move(u); }

	const C &grade(int n) const
	{
		check_grade(n);
		return g_[static_cast<std::size_t>(n)];
	}
	void set_grade(int n, C c)
	{
		check_grade(n);
		g_[static_cast<std::size_t>(n)] = std::move(c);
	}

	bool is_zero() const
	{
		if (!unit_.is_zero())
			return false;
		for (const auto &c : g_)
			if (!c.is_zero())
				return false;
		return true;
	}

	/// True when the series lies in lambda*D[[lambda]]: no unit part and
	/// zero grade 0.
	bool proper() const { return unit_.is_zero() && g_[0].is_zero(); }

	Graded operator-() const
	{
		Graded r = *this;
		r.unit_ = -r.unit_;
		for (auto &c : r.g_)
			c = -c;
		return r;
	}

	Graded &operator+=(const Graded &o)
	{
		check_order(o);
		unit_ += o.unit_;
		for (std::size_t i = 0; i < g_.size(); ++i)
			g_[i] += o.g_[i];
		return *this;
	}
	Graded &operator-=(const Graded &o) { return *this += -o; }

	friend Graded operator+(Graded a, const Graded &b) { return a += b; }
	friend Graded operator-(Graded a, const Graded &b) { return a -= b; }

	friend Graded operator*(const Rat &s, const Graded &x)
	{
		Graded r = x;
		r.unit_ = s * r.unit_;
		for (auto &c : r.g_)
			c = s * c;
		return r;
	}

	friend bool operator==(const Graded &a, const Graded &b)
	{
		return a.order_ == b.order_ && a.unit_ == b.unit_ && a.g_ == b.g_;
	}
	friend bool operator!=(const Graded &a, const Graded &b)
	{
		return !(a == b);
	}

	/// Sum of all grades, i.e. the specialization lambda = 1. The unit
	/// part must be zero (the adjoined unit has no carrier meaning).
	C collapse() const
	{
		if (!unit_.is_zero())
			throw UnitError("cannot collapse a series with a unit part");
		C r = g_[0];
		for (std::size_t i = 1; i < g_.size(); ++i)
			r = r + g_[i];
		return r;
	}

	template <class F> Graded map_grades(F &&f) const
	{
		Graded r = *this;
		for (auto &c : r.g_)
			c = f(c);
		return r;
	}

  private:
	int order_;
	Rat unit_;
	std::vector<C> g_;

	void check_grade(int n) const
	{
		if (n < 0 || n > order_)
			throw PreconditionError("grade out of range");
	}
	void check_order(const Graded &o) const
	{
		if (order_ != o.order_)
			throw PreconditionError("graded series orders differ");
	}
};

/// Bilinear extension of a dendriform operation to graded series,
/// truncating at the common order. Unit rules: a < 1 = a = 1 > a and
/// 1 < a = 0 = a > 1, hence a*1 = 1*a = a and 1*1 = 1, while 1 < 1 and
/// 1 > 1 are undefined. The pre-Lie and pointwise extensions require
/// unit-free operands.
template <class C>
Graded<C> graded_mul(const Graded<C> &a, const Graded<C> &b, DendOp kind,
                     const AlgebraOps<C> &ops)
{
	if (a.order() != b.order())
		throw PreconditionError("graded series orders differ");
	const int N = a.order();
	Graded<C> r(N, ops.zero);

	const bool ua = !a.unit().is_zero(), ub = !b.unit().is_zero();
	switch (kind)
	{
	case DendOp::prec:
		if (ua && ub)
			throw UnitError("1 < 1 is not defined");
		break;
	case DendOp::succ:
		if (ua && ub)
			throw UnitError("1 > 1 is not defined");
		break;
	case DendOp::assoc:
		r.set_unit(a.unit() * b.unit());
		break;
	case DendOp::prelie:
	case DendOp::prelie_right:
		if (ua || ub)
			throw UnitError("pre-Lie products require unit-free series");
		break;
	case DendOp::pointwise:
		if (ua || ub)
			throw UnitError("pointwise products require unit-free series");
		break;
	}

	// Cross terms with the adjoined unit.
	for (int n = 0; n <= N; ++n)
	{
		C c = ops.zero;
		switch (kind)
		{
		case DendOp::prec: // f < (beta 1) = beta f
			if (ub)
				c = c + b.unit() * a.grade(n);
			break;
		case DendOp::succ: // (alpha 1) > g = alpha g
			if (ua)
				c = c + a.unit() * b.grade(n);
			break;
		case DendOp::assoc:
			if (ub)
				c = c + b.unit() * a.grade(n);
			if (ua)
				c = c + a.unit() * b.grade(n);
			break;
		default:
			break;
		}
		r.set_grade(n, std::move(c));
	}

	auto apply = [&](const C &x, const C &y) -> C {
		switch (kind)
		{
		case DendOp::prec:
			return ops.prec(x, y);
		case DendOp::succ:
			return ops.succ(x, y);
		case DendOp::assoc:
			return ops.assoc(x, y);
		case DendOp::prelie:
			return ops.prelie(x, y);
		case DendOp::prelie_right:
			return ops.prelie_right(x, y);
		case DendOp::pointwise:
			return ops.mul(x, y);
		}
		return ops.zero;
	};

	for (int i = 0; i <= N; ++i)
	{
		if (a.grade(i).is_zero())
			continue;
		for (int j = 0; i + j <= N; ++j)
		{
			if (b.grade(j).is_zero())
				continue;
			r.set_grade(i + j, r.grade(i + j) + apply(a.grade(i), b.grade(j)));
		}
	}
	return r;
}

/// Twisting automorphism applied gradewise; Phi(1) = 1.
template <class C>
Graded<C> graded_phi(const Graded<C> &a, const AlgebraOps<C> &ops)
{
	Graded<C> r = a.map_grades([&](const C &c) { return ops.phi(c); });
	return r;
}

} // namespace qmagnus
