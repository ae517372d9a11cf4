#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qmagnus/graded.hpp"
#include "qmagnus/qcalc.hpp"
#include "qmagnus/report.hpp"

namespace qmagnus {

/// A twisted dendriform algebra is the operation bundle restricted to
/// (prec, succ, phi); the derived products come with it.
using TwistedDendAlgebra = AlgebraOps<MatPoly>;

/// The q-instance: f < g = f I_q(g), f > g = I_q(f) g, Phi = q M_q.
TwistedDendAlgebra q_dend_algebra(const QContext &ctx);

/// f <_q g = f I_q(g).
MatPoly dend_prec(const QContext &ctx, const MatPoly &f, const MatPoly &g);

/// f >_q g = I_q(f) g.
MatPoly dend_succ(const QContext &ctx, const MatPoly &f, const MatPoly &g);

/// f *_q g = f >_q g + f <_q Phi_q(g) = I_q(f) g + f M_q I_q(g).
/// Associative; I_q(f *_q g) = I_q(f) I_q(g).
MatPoly dend_assoc(const QContext &ctx, const MatPoly &f, const MatPoly &g);

/// Left pre-Lie f |>_q g = f >_q g - g <_q Phi_q(f). On constants,
/// a |>_q b = (ab - q ba) t.
MatPoly pre_lie(const QContext &ctx, const MatPoly &f, const MatPoly &g);

/// Right pre-Lie f <|_q g = f <_q Phi_q(g) - g >_q f = -(g |>_q f).
MatPoly pre_lie_right(const QContext &ctx, const MatPoly &f, const MatPoly &g);

/// Evaluates both sides of the five twisted dendriform axioms
///   Phi(x<y) = Phi(x)<Phi(y)
///   Phi(x>y) = Phi(x)>Phi(y)
///   (x<y)<z  = x<(y*z)
///   (x>y)<z  = x>(y<z)
///   x>(y>z)  = (x*y)>z
/// on every sample triple. Failures land in the report, they do not
/// throw. The serializer turns each counterexample into
/// {inputs, lhs, rhs}.
template <class C>
std::vector<LawReport>
check_twisted_axioms(const AlgebraOps<C> &alg,
                     const std::vector<std::array<C, 3>> &triples,
                     const std::function<nlohmann::json(const C &)> &dump);

/// n-fold right-nested pre-Lie power P |> (P |> (... |> P)). For a
/// polynomial P whose coefficient matrices pairwise commute this equals
/// (1-q)^{n-1} P(t)^n t^{n-1}; the equality is asserted, not assumed.
MatPoly nfold_prelie_commuting(const QContext &ctx, const MatPoly &P, int n);

/// Coefficient of t^{m+n-1} in the n-fold pre-Lie power above, by the
/// multinomial expansion of (1-q)^{n-1} P(t)^n: sums
/// multinomial(n; k_0..k_N) a_0^{k_0} ... a_N^{k_N} over k_0+...+k_N = n,
/// k_1 + 2 k_2 + ... + N k_N = m.
Mat nfold_coefficient(const QContext &ctx, const std::vector<Mat> &coeffs,
                      int m, int n);

// ---------------------------------------------------------------------

template <class C>
std::vector<LawReport>
check_twisted_axioms(const AlgebraOps<C> &alg,
                     const std::vector<std::array<C, 3>> &triples,
                     const std::function<nlohmann::json(const C &)> &dump)
{
	struct Axiom {
		const char *name;
		std::function<C(const C &, const C &, const C &)> lhs, rhs;
	};
	const std::vector<Axiom> axioms = {
	    {"phi-prec",
	     [&](const C &x, const C &y, const C &) {
		     return alg.phi(alg.prec(x, y));
	     },
	     [&](const C &x, const C &y, const C &) {
		     return alg.prec(alg.phi(x), alg.phi(y));
	     }},
	    {"phi-succ",
	     [&](const C &x, const C &y, const C &) {
		     return alg.phi(alg.succ(x, y));
	     },
	     [&](const C &x, const C &y, const C &) {
		     return alg.succ(alg.phi(x), alg.phi(y));
	     }},
	    {"prec-prec",
	     [&](const C &x, const C &y, const C &z) {
		     return alg.prec(alg.prec(x, y), z);
	     },
	     [&](const C &x, const C &y, const C &z) {
		     return alg.prec(x, alg.assoc(y, z));
	     }},
	    {"succ-prec",
	     [&](const C &x, const C &y, const C &z) {
		     return alg.prec(alg.succ(x, y), z);
	     },
	     [&](const C &x, const C &y, const C &z) {
		     return alg.succ(x, alg.prec(y, z));
	     }},
	    {"succ-succ",
	     [&](const C &x, const C &y, const C &z) {
		     return alg.succ(x, alg.succ(y, z));
	     },
	     [&](const C &x, const C &y, const C &z) {
		     return alg.succ(alg.assoc(x, y), z);
	     }},
	};

	std::vector<LawReport> reports;
	for (const auto &ax : axioms)
	{
		LawReport rep;
		rep.name = ax.name;
		rep.samples = static_cast<int>(triples.size());
		for (const auto &[x, y, z] : triples)
		{
			C lhs = ax.lhs(x, y, z), rhs = ax.rhs(x, y, z);
			if (!(lhs == rhs))
				rep.failures.push_back({{"inputs",
				                         {dump(x), dump(y), dump(z)}},
				                        {"lhs", dump(lhs)},
				                        {"rhs", dump(rhs)}});
		}
		reports.push_back(std::move(rep));
	}
	return reports;
}

} // namespace qmagnus
