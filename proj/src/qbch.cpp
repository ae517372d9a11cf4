#include "qmagnus/qbch.hpp"

#include "qmagnus/qcalc.hpp"

namespace qmagnus {

FreeSeries free_q_exp(const Rat &q, const FreeSeries &z)
{
	if (!z.constant_term().is_zero())
		throw PreconditionError("free q-exponential needs zero constant term");
	const int N = z.order();
	QContext qc(q, 1);
	FreeSeries r = FreeSeries::unit(N);
	FreeSeries pw = z;
	r += pw;
	for (int n = 2; n <= N; ++n)
	{
		pw = pw * z;
		r += q_factorial(qc, n).inv() * pw;
	}
	return r;
}

FreeSeries free_q_log(const Rat &q, const FreeSeries &s)
{
	if (s.constant_term() != Rat(1))
		throw PreconditionError("free q-logarithm needs constant term 1");
	const int N = s.order();
	QContext qc(q, 1);
	FreeSeries z(N);
	for (int d = 1; d <= N; ++d)
	{
		// Degree-d part of sum_{k>=2} Z^k/[k]_q! only uses lower-degree
		// parts of Z, which are already final.
		FreeSeries acc = s.component(d);
		FreeSeries pw = z;
		for (int k = 2; k <= d; ++k)
		{
			pw = pw * z;
			acc -= q_factorial(qc, k).inv() * pw.component(d);
		}
		for (const auto &[w, c] : acc.terms())
			z.set(w, c);
	}
	return z;
}

QBchResult q_bch(const Rat &q, int order)
{
	if (order < 1)
		throw PreconditionError("order must be >= 1");
	FreeSeries x = FreeSeries::generator('x', order);
	FreeSeries y = FreeSeries::generator('y', order);
	FreeSeries z = free_q_log(q, free_q_exp(q, x) * free_q_exp(q, y));
	QBchResult r{q, order, z, {}};
	for (int d = 0; d <= order; ++d)
		r.by_degree.push_back(z.component(d));
	return r;
}

Mat free_eval(const FreeSeries &s, const Mat &x_val, const Mat &y_val)
{
	if (x_val.dim() != y_val.dim())
		throw DimensionError("generator values differ in dimension");
	Mat out(x_val.dim());
	for (const auto &[w, c] : s.terms())
	{
		Mat p = Mat::identity(x_val.dim());
		for (char ch : w)
			p = p * (ch == 'x' ? x_val : y_val);
		out += c * p;
	}
	return out;
}

std::string render_words(const FreeSeries &s)
{
	if (s.is_zero())
		return "0";
	std::string out;
	for (const auto &[w, c] : s.terms())
	{
		if (!out.empty())
			out += c.sign() >= 0 ? " + " : " - ";
		else if (c.sign() < 0)
			out += "-";
		Rat mag = c.abs();
		if (!mag.is_one() || w.empty())
			out += mag.str();
		if (!w.empty())
		{
			if (!mag.is_one())
				out += "*";
			out += w;
		}
	}
	return out;
}

std::string render_q_brackets(const QBchResult &r, int degree)
{
	if (degree < 0 || degree > r.order)
		throw PreconditionError("degree out of range");
	const FreeSeries &comp = r.by_degree[static_cast<std::size_t>(degree)];
	const int N = r.order;
	FreeSeries x = FreeSeries::generator('x', N);
	FreeSeries y = FreeSeries::generator('y', N);

	struct Pattern {
		std::string label;
		FreeSeries value;
	};
	std::vector<Pattern> candidates;
	if (degree == 2)
		candidates.push_back({"[y,x]_q", q_commutator(r.q, y, x)});
	if (degree == 3)
		candidates.push_back(
		    {"([[x,y]_q,x]_q + [y,[x,y]_q]_q)",
		     q_commutator(r.q, q_commutator(r.q, x, y), x) +
		         q_commutator(r.q, y, q_commutator(r.q, x, y))});

	for (const auto &cand : candidates)
	{
		// Solve for a single rational multiple by matching one word.
		for (const auto &[w, c] : cand.value.terms())
		{
			if (c.is_zero())
				continue;
			Rat ratio = comp.coeff(w) / c;
			if (ratio * cand.value == comp)
				return "(" + ratio.str() + ") " + cand.label;
			break;
		}
	}
	return render_words(comp);
}

} // namespace qmagnus
