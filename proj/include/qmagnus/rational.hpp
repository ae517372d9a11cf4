#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "qmagnus/errors.hpp"

namespace qmagnus {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Invariants: denominator > 0, gcd(|num|, den) = 1,
/// and zero is stored as 0/1.
class Rat {
  public:
	Rat() : num_(0), den_(1) {}
	Rat(long long n) : num_(n), den_(1) {}
	Rat(BigInt n) : num_(std::move(n)), den_(1) {}
	Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
	{
		normalize();
	}

	static Rat parse(std::string_view s);

	const BigInt &num() const { return num_; }
	const BigInt &den() const { return den_; }

	bool is_zero() const { return num_ == 0; }
	bool is_one() const { return num_ == 1 && den_ == 1; }
	int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

	Rat operator-() const
	{
		Rat r;
		r.num_ = -num_;
		r.den_ = den_;
		return r;
	}

	Rat &operator+=(const Rat &o)
	{
		num_ = num_ * o.den_ + o.num_ * den_;
		den_ *= o.den_;
		normalize();
		return *this;
	}
	Rat &operator-=(const Rat &o)
	{
		num_ = num_ * o.den_ - o.num_ * den_;
		den_ *= o.den_;
		normalize();
		return *this;
	}
	Rat &operator*=(const Rat &o)
	{
		num_ *= o.num_;
		den_ *= o.den_;
		normalize();
		return *this;
	}
	Rat &operator/=(const Rat &o)
	{
		if (o.num_ == 0)
			throw ArithmeticError("rational division by zero");
		num_ *= o.den_;
		den_ *= o.num_;
		normalize();
		return *this;
	}

	friend Rat operator+(Rat a, const Rat &b) { return a += b; }
	friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
	friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
	friend Rat operator/(Rat a, const Rat &b) { return a /= b; }

	friend bool operator==(const Rat &a, const Rat &b)
	{
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(const Rat &a, const Rat &b) { return !(a == b); }
	friend bool operator<(const Rat &a, const Rat &b)
	{
		return a.num_ * b.den_ < b.num_ * a.den_;
	}
	friend bool operator<=(const Rat &a, const Rat &b) { return !(b < a); }
	friend bool operator>(const Rat &a, const Rat &b) { return b < a; }
	friend bool operator>=(const Rat &a, const Rat &b) { return !(a < b); }

	Rat abs() const { return num_ < 0 ? -*this : *this; }

	Rat inv() const
	{
		if (num_ == 0)
			throw ArithmeticError("inverse of zero");
		Rat r;
		r.num_ = den_;
		r.den_ = num_;
		if (r.den_ < 0)
		{
			r.num_ = -r.num_;
			r.den_ = -r.den_;
		}
		return r;
	}

	/// "p" when den == 1, otherwise "p/q".
	std::string str() const
	{
		std::string s = num_.str();
		if (den_ != 1)
		{
			s += '/';
			s += den_.str();
		}
		return s;
	}

	/// Approximate value, for reporting only. All comparisons in the
	/// library are exact.
	double approx() const
	{
		using boost::multiprecision::cpp_rational;
		return cpp_rational(num_, den_).convert_to<double>();
	}

  private:
	BigInt num_, den_;

	void normalize()
	{
		if (den_ == 0)
			throw ArithmeticError("rational with zero denominator");
		if (den_ < 0)
		{
			num_ = -num_;
			den_ = -den_;
		}
		if (num_ == 0)
		{
			den_ = 1;
			return;
		}
		BigInt g = boost::multiprecision::gcd(num_, den_);
		num_ /= g;
		den_ /= g;
	}
};

inline Rat Rat::parse(std::string_view s)
{
	auto bad = [&] { throw ParseError("invalid rational \"" + std::string(s) + "\""); };
	if (s.empty())
		bad();
	auto slash = s.find('/');
	auto parse_int = [&](std::string_view t) -> BigInt {
		if (t.empty())
			bad();
		std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
		if (i == t.size())
			bad();
		for (; i < t.size(); ++i)
			if (t[i] < '0' || t[i] > '9')
				bad();
		return BigInt(std::string(t));
	};
	if (slash == std::string_view::npos)
		return Rat(parse_int(s));
	return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

/// base^e for integer e; negative exponents invert (base must be nonzero).
inline Rat rat_pow(const Rat &base, long long e)
{
	if (e < 0)
		return rat_pow(base.inv(), -e);
	Rat r(1), b = base;
	while (e > 0)
	{
		if (e & 1)
			r *= b;
		b *= b;
		e >>= 1;
	}
	return r;
}

inline Rat factorial(int n)
{
	BigInt r = 1;
	for (int i = 2; i <= n; ++i)
		r *= i;
	return Rat(r);
}

inline Rat binomial(int n, int k)
{
	if (k < 0 || k > n)
		return Rat(0);
	BigInt r = 1;
	for (int i = 0; i < k; ++i)
	{
		r *= n - i;
		r /= i + 1;
	}
	return Rat(r);
}

} // namespace qmagnus
