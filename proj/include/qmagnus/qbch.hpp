#pragma once

#include <string>
#include <vector>

#include "qmagnus/free_series.hpp"
#include "qmagnus/matrix.hpp"

namespace qmagnus {

/// e_q(z) = sum_n z^n / [n]_q! in the free algebra; z must have zero
/// constant term.
FreeSeries free_q_exp(const Rat &q, const FreeSeries &z);

/// Compositional inverse of free_q_exp, solved word-length by
/// word-length: the unique Z with zero constant term and
/// free_q_exp(Z) = s. The input must have constant term exactly 1.
FreeSeries free_q_log(const Rat &q, const FreeSeries &s);

/// BCH_q(x, y) = free_q_log(e_q(x) e_q(y)): the series Z with
/// e_q(x) e_q(y) = e_q(Z). Degree 1 is x + y; degree 2 is
/// -[y,x]_q/[2]_q; degree 3 is
/// -(q/([2]_q [3]_q!)) ([[x,y]_q,x]_q + [y,[x,y]_q]_q).
struct QBchResult {
	Rat q;
	int order;
	FreeSeries terms;
	std::vector<FreeSeries> by_degree; // index d = homogeneous component
};

QBchResult q_bch(const Rat &q, int order);

/// Substitutes matrices for the generators word by word.
Mat free_eval(const FreeSeries &s, const Mat &x_val, const Mat &y_val);

/// Best-effort rendering of one homogeneous component in terms of
/// iterated q-commutators. Degrees 2 and 3 are pattern-matched against
/// their known shapes; anything else falls back to the raw word form.
std::string render_q_brackets(const QBchResult &r, int degree);

/// Raw word rendering, e.g. "3/2 xy - 1/2 yx".
std::string render_words(const FreeSeries &s);

} // namespace qmagnus
