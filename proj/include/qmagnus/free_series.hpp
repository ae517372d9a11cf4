#pragma once

#include <map>
#include <string>

#include "qmagnus/rational.hpp"

namespace qmagnus {

/// Truncated series in the free associative algebra on the two generators
/// x and y, with rational coefficients. Words are strings over {x, y};
/// the empty word is the unit. Words longer than the truncation order are
/// discarded by every operation.
class FreeSeries {
  public:
	explicit FreeSeries(int order) : order_(order)
	{
		if (order < 0)
			throw PreconditionError("negative truncation order");
	}

	static FreeSeries unit(int order)
	{
		FreeSeries s(order);
		s.t_.emplace("", Rat(1));
		return s;
	}

	static FreeSeries generator(char g, int order)
	{
		FreeSeries s(order);
		s.set("", Rat(0));
		s.set(std::string(1, g), Rat(1));
		return s;
	}

	int order() const { return order_; }
	bool is_zero() const { return t_.empty(); }

	const std::map<std::string, Rat> &terms() const { return t_; }

	Rat coeff(const std::string &w) const
	{
		auto it = t_.find(w);
		return it == t_.end() ? Rat(0) : it->second;
	}

	void set(const std::string &w, const Rat &c)
	{
		for (char ch : w)
			if (ch != 'x' && ch != 'y')
				throw PreconditionError("word contains a letter other than x, y");
		if (static_cast<int>(w.size()) > order_)
			throw PreconditionError("word longer than truncation order");
		if (c.is_zero())
			t_.erase(w);
		else
			t_.insert_or_assign(w, c);
	}

	/// Homogeneous component of the given word length.
	FreeSeries component(int degree) const
	{
		FreeSeries r(order_);
		for (const auto &[w, c] : t_)
			if (static_cast<int>(w.size()) == degree)
				r.t_.emplace(w, c);
		return r;
	}

	FreeSeries truncated(int order) const
	{
		FreeSeries r(order);
		for (const auto &[w, c] : t_)
			if (static_cast<int>(w.size()) <= order)
				r.t_.emplace(w, c);
		return r;
	}

	Rat constant_term() const { return coeff(""); }

	FreeSeries operator-() const
	{
		FreeSeries r(order_);
		for (const auto &[w, c] : t_)
			r.t_.emplace(w, -c);
		return r;
	}

	FreeSeries &operator+=(const FreeSeries &o)
	{
		check_order(o);
		for (const auto &[w, c] : o.t_)
		{
			auto it = t_.find(w);
			if (it == t_.end())
				t_.emplace(w, c);
			else
			{
				it->second += c;
				if (it->second.is_zero())
					t_.erase(it);
			}
		}
		return *this;
	}
	FreeSeries &operator-=(const FreeSeries &o) { return *this += -o; }

	friend FreeSeries operator+(FreeSeries a, const FreeSeries &b)
	{
		return a += b;
	}
	friend FreeSeries operator-(FreeSeries a, const FreeSeries &b)
	{
		return a -= b;
	}

	/// Concatenation product, truncated at the common order.
	friend FreeSeries operator*(const FreeSeries &a, const FreeSeries &b)
	{
		a.check_order(b);
		FreeSeries r(a.order_);
		for (const auto &[u, c] : a.t_)
			for (const auto &[v, d] : b.t_)
			{
				if (static_cast<int>(u.size() + v.size()) > a.order_)
					continue;
				Rat prod = c * d;
				if (prod.is_zero())
					continue;
				std::string w = u + v;
				auto it = r.t_.find(w);
				if (it == r.t_.end())
					r.t_.emplace(std::move(w), prod);
				else
				{
					it->second += prod;
					if (it->second.is_zero())
						r.t_.erase(it);
				}
			}
		return r;
	}

	friend FreeSeries operator*(const Rat &s, const FreeSeries &f)
	{
		FreeSeries r(f.order_);
		if (s.is_zero())
			return r;
		for (const auto &[w, c] : f.t_)
			r.t_.emplace(w, s * c);
		return r;
	}

	friend bool operator==(const FreeSeries &a, const FreeSeries &b)
	{
		return a.order_ == b.order_ && a.t_ == b.t_;
	}
	friend bool operator!=(const FreeSeries &a, const FreeSeries &b)
	{
		return !(a == b);
	}

  private:
	int order_;
	std::map<std::string, Rat> t_;

	void check_order(const FreeSeries &o) const
	{
		if (order_ != o.order_)
			throw PreconditionError("free series truncation orders differ");
	}
};

inline FreeSeries free_mul(const FreeSeries &a, const FreeSeries &b)
{
	return a * b;
}

/// q-commutator [a, b]_q = ab - q ba.
inline FreeSeries q_commutator(const Rat &q, const FreeSeries &a,
                               const FreeSeries &b)
{
	return a * b - q * (b * a);
}

} // namespace qmagnus
