#include "qmagnus/verify.hpp"

#include <functional>
#include <optional>

#include "qmagnus/dendriform.hpp"
#include "qmagnus/finitediff.hpp"
#include "qmagnus/json_io.hpp"
#include "qmagnus/magnus.hpp"
#include "qmagnus/qbch.hpp"
#include "qmagnus/sampling.hpp"

namespace qmagnus {

namespace {

using nlohmann::json;

constexpr int kMaxStoredFailures = 3;

/// Runs `one_sample` `samples` times; a returned json is a failure record.
LawReport
law(const std::string &name, int samples,
    const std::function<std::optional<json>(int)> &one_sample)
{
	LawReport rep;
	rep.name = name;
	rep.samples = samples;
	for (int i = 0; i < samples; ++i)
	{
		auto fail = one_sample(i);
		if (fail)
		{
			if (static_cast<int>(rep.failures.size()) < kMaxStoredFailures)
				rep.failures.push_back(std::move(*fail));
			else
				rep.failures.back()["suppressed"] = true;
		}
	}
	return rep;
}

LawReport skipped(const std::string &name, const std::string &why)
{
	LawReport rep;
	rep.name = name;
	rep.skipped = true;
	rep.note = why;
	return rep;
}

json poly_failure(const MatPoly &lhs, const MatPoly &rhs,
                  std::vector<MatPoly> inputs)
{
	json in = json::array();
	for (const auto &p : inputs)
		in.push_back(to_json(p));
	return {{"inputs", std::move(in)},
	        {"lhs", to_json(lhs)},
	        {"rhs", to_json(rhs)}};
}

std::uint64_t suite_seed(const VerifyOptions &opts, const std::string &name)
{
	std::uint64_t h = opts.seed;
	for (char c : name)
		h = h * 1099511628211ULL + static_cast<unsigned char>(c);
	return h;
}

// --- q-calculus -------------------------------------------------------

std::vector<LawReport> suite_qcalc(const VerifyOptions &opts)
{
	QContext ctx(opts.q, opts.dim);
	Sampler rng(suite_seed(opts, "q-calculus"));
	std::vector<LawReport> out;

	out.push_back(law("derive-after-integral", opts.samples, [&](int) {
		MatPoly f = rng.poly(ctx.dim, 3);
		MatPoly lhs = q_derive(ctx, jackson_integral(ctx, f));
		if (lhs == f)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, f, {f})};
	}));

	out.push_back(law("integral-after-derive", opts.samples, [&](int) {
		MatPoly f = rng.poly(ctx.dim, 3);
		MatPoly lhs = jackson_integral(ctx, q_derive(ctx, f));
		MatPoly rhs = f - MatPoly::constant(f.coeff(0));
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {f})};
	}));

	out.push_back(law("q-leibniz", opts.samples, [&](int) {
		MatPoly f = rng.poly(ctx.dim, 3), g = rng.poly(ctx.dim, 3);
		MatPoly lhs = q_derive(ctx, f * g);
		MatPoly rhs = q_derive(ctx, f) * q_dilate(ctx, g) + f * q_derive(ctx, g);
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {f, g})};
	}));

	out.push_back(law("dilate-integral-exchange", opts.samples, [&](int) {
		MatPoly f = rng.poly(ctx.dim, 3);
		MatPoly lhs = q_dilate(ctx, jackson_integral(ctx, f));
		MatPoly rhs = ctx.q * jackson_integral(ctx, q_dilate(ctx, f));
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {f})};
	}));

	out.push_back(law("q-exp-eigenfunction", 8, [&](int) {
		Mat u = rng.mat(ctx.dim);
		const int N = opts.order + 2;
		MatPoly e = q_exp_small(ctx, u, N);
		MatPoly lhs = q_derive(ctx, e);
		MatPoly rhs = (MatPoly::constant(u) * e).truncated(N - 1);
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {e})};
	}));

	return out;
}

// --- Rota-Baxter laws -------------------------------------------------

std::vector<LawReport> suite_rota_baxter(const VerifyOptions &opts)
{
	QContext ctx(opts.q, opts.dim);
	Sampler rng(suite_seed(opts, "rota-baxter"));
	std::vector<LawReport> out;

	out.push_back(law("q-twisted-weight-zero", opts.samples, [&](int) {
		MatPoly f = rng.poly(ctx.dim, 3), g = rng.poly(ctx.dim, 3);
		MatPoly lhs = jackson_integral(
		    ctx, f * q_dilate(ctx, jackson_integral(ctx, g)) +
		             jackson_integral(ctx, f) * g);
		MatPoly rhs = jackson_integral(ctx, f) * jackson_integral(ctx, g);
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {f, g})};
	}));

	out.push_back(law("mixed-identity", opts.samples, [&](int) {
		MatPoly f = rng.poly(ctx.dim, 3), g = rng.poly(ctx.dim, 3);
		MatPoly if_ = jackson_integral(ctx, f), ig = jackson_integral(ctx, g);
		MatPoly lhs =
		    if_ * ig + (Rat(1) - ctx.q) *
		                   jackson_integral(ctx, f * MatPoly::iota(ctx.dim) * g);
		MatPoly rhs = jackson_integral(ctx, if_ * g + f * ig);
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {f, g})};
	}));

	if (ctx.classical())
	{
		out.push_back(skipped("summation-weight-one",
		                      "summation operator diverges at q = 1"));
		out.push_back(skipped("summation-weight-minus-one",
		                      "summation operator diverges at q = 1"));
		out.push_back(skipped("integral-via-summation",
		                      "summation operator diverges at q = 1"));
	}
	else
	{
		out.push_back(law("summation-weight-one", opts.samples, [&](int) {
			MatPoly f = rng.poly_zero_const(ctx.dim, 3);
			MatPoly g = rng.poly_zero_const(ctx.dim, 3);
			MatPoly lhs = p_operator(ctx, f) * p_operator(ctx, g);
			MatPoly rhs = p_operator(ctx, p_operator(ctx, f) * g) +
			              p_operator(ctx, f * p_operator(ctx, g)) +
			              p_operator(ctx, f * g);
			if (lhs == rhs)
				return std::optional<json>{};
			return std::optional<json>{poly_failure(lhs, rhs, {f, g})};
		}));

		out.push_back(law("summation-weight-minus-one", opts.samples, [&](int) {
			MatPoly f = rng.poly_zero_const(ctx.dim, 3);
			MatPoly g = rng.poly_zero_const(ctx.dim, 3);
			MatPoly lhs = p_hat(ctx, f) * p_hat(ctx, g);
			MatPoly rhs = p_hat(ctx, p_hat(ctx, f) * g) +
			              p_hat(ctx, f * p_hat(ctx, g)) - p_hat(ctx, f * g);
			if (lhs == rhs)
				return std::optional<json>{};
			return std::optional<json>{poly_failure(lhs, rhs, {f, g})};
		}));

		out.push_back(law("integral-via-summation", opts.samples, [&](int) {
			MatPoly f = rng.poly(ctx.dim, 3);
			MatPoly lhs = (Rat(1) - ctx.q) *
			              p_hat(ctx, MatPoly::iota(ctx.dim) * f);
			MatPoly rhs = jackson_integral(ctx, f);
			if (lhs == rhs)
				return std::optional<json>{};
			return std::optional<json>{poly_failure(lhs, rhs, {f})};
		}));
	}

	{
		Rat h(1, 2);
		const int len = 17;
		LawReport rep;
		rep.name = "weight-h-rota-baxter";
		rep.samples = opts.samples;
		for (int i = 0; i < opts.samples; ++i)
		{
			GridFn f(h, len, opts.dim), g(h, len, opts.dim);
			for (int j = 0; j < len; ++j)
			{
				f.at(j) = rng.mat(opts.dim);
				g.at(j) = rng.mat(opts.dim);
			}
			LawReport one = rb_check_h(f, g);
			for (auto &fl : one.failures)
				if (static_cast<int>(rep.failures.size()) < kMaxStoredFailures)
					rep.failures.push_back(std::move(fl));
		}
		out.push_back(std::move(rep));
	}

	return out;
}

// --- twisted dendriform axioms ---------------------------------------

std::vector<LawReport> suite_dendriform(const VerifyOptions &opts)
{
	QContext ctx(opts.q, opts.dim);
	Sampler rng(suite_seed(opts, "dendriform"));

	std::vector<std::array<MatPoly, 3>> triples;
	for (int i = 0; i < opts.samples; ++i)
		triples.push_back({rng.poly(ctx.dim, 3), rng.poly(ctx.dim, 3),
		                   rng.poly(ctx.dim, 3)});

	std::function<json(const MatPoly &)> dump = [](const MatPoly &p) {
		return to_json(p);
	};
	return check_twisted_axioms<MatPoly>(q_dend_algebra(ctx), triples, dump);
}

// --- pre-Lie laws -----------------------------------------------------

std::vector<LawReport> suite_prelie(const VerifyOptions &opts)
{
	QContext ctx(opts.q, opts.dim);
	Sampler rng(suite_seed(opts, "pre-lie"));
	std::vector<LawReport> out;

	out.push_back(law("left-pre-lie", opts.samples, [&](int) {
		MatPoly a = rng.poly(ctx.dim, 3), b = rng.poly(ctx.dim, 3),
		        c = rng.poly(ctx.dim, 3);
		MatPoly lhs = pre_lie(ctx, pre_lie(ctx, a, b), c) -
		              pre_lie(ctx, a, pre_lie(ctx, b, c));
		MatPoly rhs = pre_lie(ctx, pre_lie(ctx, b, a), c) -
		              pre_lie(ctx, b, pre_lie(ctx, a, c));
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {a, b, c})};
	}));

	out.push_back(law("right-pre-lie", opts.samples, [&](int) {
		MatPoly a = rng.poly(ctx.dim, 3), b = rng.poly(ctx.dim, 3),
		        c = rng.poly(ctx.dim, 3);
		MatPoly lhs = pre_lie_right(ctx, pre_lie_right(ctx, a, b), c) -
		              pre_lie_right(ctx, a, pre_lie_right(ctx, b, c));
		MatPoly rhs = pre_lie_right(ctx, pre_lie_right(ctx, a, c), b) -
		              pre_lie_right(ctx, a, pre_lie_right(ctx, c, b));
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {a, b, c})};
	}));

	out.push_back(law("associativity", opts.samples, [&](int) {
		MatPoly a = rng.poly(ctx.dim, 3), b = rng.poly(ctx.dim, 3),
		        c = rng.poly(ctx.dim, 3);
		MatPoly lhs = dend_assoc(ctx, dend_assoc(ctx, a, b), c);
		MatPoly rhs = dend_assoc(ctx, a, dend_assoc(ctx, b, c));
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {a, b, c})};
	}));

	out.push_back(law("common-lie-bracket", opts.samples, [&](int) {
		MatPoly a = rng.poly(ctx.dim, 3), b = rng.poly(ctx.dim, 3);
		MatPoly br1 = dend_assoc(ctx, a, b) - dend_assoc(ctx, b, a);
		MatPoly br2 = pre_lie(ctx, a, b) - pre_lie(ctx, b, a);
		MatPoly br3 = pre_lie_right(ctx, a, b) - pre_lie_right(ctx, b, a);
		if (br1 == br2 && br2 == br3)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(br1, br2, {a, b})};
	}));

	out.push_back(law("phi-automorphism", opts.samples, [&](int) {
		MatPoly a = rng.poly(ctx.dim, 3), b = rng.poly(ctx.dim, 3);
		bool ok = phi_q(ctx, pre_lie(ctx, a, b)) ==
		              pre_lie(ctx, phi_q(ctx, a), phi_q(ctx, b)) &&
		          phi_q(ctx, pre_lie_right(ctx, a, b)) ==
		              pre_lie_right(ctx, phi_q(ctx, a), phi_q(ctx, b)) &&
		          phi_q(ctx, dend_assoc(ctx, a, b)) ==
		              dend_assoc(ctx, phi_q(ctx, a), phi_q(ctx, b)) &&
		          phi_q_inv(ctx, phi_q(ctx, a)) == a;
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(a, b, {a, b})};
	}));

	out.push_back(law("commuting-collapse", opts.samples, [&](int) {
		auto [a, b] = rng.commuting_pair(ctx.dim);
		MatPoly pa = MatPoly::constant(a), pb = MatPoly::constant(b);
		MatPoly ab = pre_lie(ctx, pa, pb), ba = pre_lie(ctx, pb, pa);
		MatPoly expect =
		    MatPoly::monomial(1, (Rat(1) - ctx.q) * (a * b));
		if (ab == ba && ab == expect)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(ab, expect, {pa, pb})};
	}));

	out.push_back(law("succ-symmetrization", opts.samples, [&](int) {
		MatPoly f = rng.poly(ctx.dim, 3), g = rng.poly(ctx.dim, 3);
		MatPoly lhs = dend_assoc(ctx, f, g) + pre_lie(ctx, g, f);
		MatPoly rhs = dend_succ(ctx, f, g) + dend_succ(ctx, g, f);
		bool ok = lhs == rhs &&
		          jackson_integral(ctx, lhs) ==
		              jackson_integral(ctx, jackson_integral(ctx, f) * g) +
		                  jackson_integral(ctx, jackson_integral(ctx, g) * f);
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {f, g})};
	}));

	out.push_back(law("integral-multiplicativity", opts.samples, [&](int) {
		MatPoly f = rng.poly(ctx.dim, 3), g = rng.poly(ctx.dim, 3);
		MatPoly lhs = jackson_integral(ctx, dend_assoc(ctx, f, g));
		MatPoly rhs = jackson_integral(ctx, f) * jackson_integral(ctx, g);
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{poly_failure(lhs, rhs, {f, g})};
	}));

	{
		LawReport rep;
		rep.name = "n-fold-commuting";
		rep.samples = 16;
		for (int i = 0; i < rep.samples; ++i)
		{
			MatPoly P = rng.commuting_poly(ctx.dim, 2);
			for (int n = 1; n <= 4; ++n)
			{
				MatPoly folded = nfold_prelie_commuting(ctx, P, n);
				std::vector<Mat> coeffs;
				for (int k = 0; k <= 2; ++k)
					coeffs.push_back(P.coeff(k));
				for (int m = 0; m <= 2 * n; ++m)
				{
					Mat got = folded.coeff(m + n - 1);
					Mat want = nfold_coefficient(ctx, coeffs, m, n);
					if (!(got == want) &&
					    static_cast<int>(rep.failures.size()) <
					        kMaxStoredFailures)
						rep.failures.push_back({{"n", n},
						                        {"m", m},
						                        {"got", to_json(got)},
						                        {"want", to_json(want)}});
				}
			}
		}
		out.push_back(std::move(rep));
	}

	return out;
}

// --- Magnus machinery -------------------------------------------------

std::vector<LawReport> suite_magnus(const VerifyOptions &opts)
{
	QContext ctx(opts.q, opts.dim);
	Sampler rng(suite_seed(opts, "magnus"));
	const auto ops = q_algebra_ops(ctx);
	const MatPoly zero(ctx.dim);
	const int N = opts.order;
	const int heavy = std::max(4, opts.samples / 8);
	std::vector<LawReport> out;

	out.push_back(law("fixed-point-pair", heavy, [&](int) {
		MatPoly a = MatPoly::constant(rng.mat(ctx.dim));
		auto sol = solve_dend_pair(ops, a, N);
		LamSeries u = LamSeries::embed(a, 1, N, zero);
		LamSeries omega = omega_prime(ops, u);

		// X = 1 + a < Phi(X), Y = 1 - Y > a, re-derived through exp*.
		LamSeries X = exp_star(ops, omega);
		LamSeries Y = exp_star(ops, -omega);
		LamSeries rhsX = graded_mul(u, graded_phi(sol.X, ops), DendOp::prec, ops);
		rhsX.set_unit(Rat(1));
		LamSeries rhsY = -graded_mul(sol.Y, u, DendOp::succ, ops);
		rhsY.set_unit(Rat(1));

		LamSeries prod = graded_mul(Y, X, DendOp::assoc, ops);
		LamSeries unit_series(N, zero);
		unit_series.set_unit(Rat(1));

		bool ok = X == sol.X && Y == sol.Y && sol.X == rhsX &&
		          sol.Y == rhsY && prod == unit_series;
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(a)}}};
	}));

	out.push_back(law("recursion-forms-agree", heavy, [&](int) {
		LamSeries u(N, zero);
		for (int g = 1; g <= std::min(N, 3); ++g)
			u.set_grade(g, rng.poly(ctx.dim, 2));
		if (omega_prime(ops, u) == omega_prime_adjoint(ops, u))
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(u)}}};
	}));

	out.push_back(law("w-inverts-omega", heavy, [&](int) {
		LamSeries u(N, zero);
		u.set_grade(1, MatPoly::constant(rng.mat(ctx.dim)));
		if (N >= 2)
			u.set_grade(2, rng.poly(ctx.dim, 1));
		bool ok = w_map(ops, omega_prime(ops, u)) == u &&
		          omega_prime(ops, w_map(ops, u)) == u;
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(u)}}};
	}));

	out.push_back(law("displayed-grades", heavy, [&](int) {
		MatPoly a = MatPoly::constant(rng.mat(ctx.dim));
		LamSeries omega =
		    omega_prime(ops, LamSeries::embed(a, 1, std::max(N, 3), zero));
		MatPoly aa = pre_lie(ctx, a, a);
		bool ok = omega.grade(1) == a &&
		          omega.grade(2) == Rat(-1, 2) * aa &&
		          omega.grade(3) == Rat(1, 4) * pre_lie(ctx, aa, a) +
		                                Rat(1, 12) * pre_lie(ctx, a, aa);
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(a)}}};
	}));

	out.push_back(law("sharp-group-law", heavy, [&](int) {
		LamSeries a = LamSeries::embed(MatPoly::constant(rng.mat(ctx.dim)), 1,
		                               N, zero);
		LamSeries b = LamSeries::embed(MatPoly::constant(rng.mat(ctx.dim)), 1,
		                               N, zero);
		LamSeries c = LamSeries::embed(MatPoly::constant(rng.mat(ctx.dim)), 1,
		                               N, zero);
		LamSeries zero_series(N, zero);
		bool ok = sharp(ops, zero_series, b) == b &&
		          sharp(ops, a, zero_series) == a &&
		          sharp(ops, a, sharp_inverse(ops, a)) == zero_series &&
		          sharp(ops, sharp(ops, a, b), c) ==
		              sharp(ops, a, sharp(ops, b, c));
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"a", to_json(a)}, {"b", to_json(b)}}};
	}));

	out.push_back(law("sharp-transfer", heavy, [&](int) {
		LamSeries a = LamSeries::embed(MatPoly::constant(rng.mat(ctx.dim)), 1,
		                               N, zero);
		LamSeries b = LamSeries::embed(MatPoly::constant(rng.mat(ctx.dim)), 1,
		                               N, zero);
		// W(a) # W(b) = W(a) + e^{L(a)} W(b)
		LamSeries lhs = sharp(ops, w_map(ops, a), w_map(ops, b));
		LamSeries rhs = w_map(ops, a);
		LamSeries term = w_map(ops, b);
		rhs += term;
		for (int k = 1; k <= N; ++k)
		{
			term = graded_mul(a, term, DendOp::prelie, ops);
			rhs += factorial(k).inv() * term;
		}
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{json{{"a", to_json(a)}, {"b", to_json(b)}}};
	}));

	out.push_back(law("bch-star-basics", heavy, [&](int) {
		LamSeries x = LamSeries::embed(rng.poly(ctx.dim, 1), 1, N, zero);
		LamSeries y = LamSeries::embed(rng.poly(ctx.dim, 1), 1, N, zero);
		LamSeries zero_series(N, zero);
		LamSeries z = bch_classical(ops, x, y);
		MatPoly star_comm = ops.assoc(x.grade(1), y.grade(1)) -
		                    ops.assoc(y.grade(1), x.grade(1));
		bool ok = bch_classical(ops, x, zero_series) == x &&
		          bch_classical(ops, x, Rat(2) * x) == Rat(3) * x &&
		          z.grade(1) == x.grade(1) + y.grade(1) &&
		          z.grade(2) == Rat(1, 2) * star_comm;
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"x", to_json(x)}, {"y", to_json(y)}}};
	}));

	return out;
}

// --- closed forms for constant inputs ---------------------------------

std::vector<LawReport> suite_closed_forms(const VerifyOptions &opts)
{
	QContext ctx(opts.q, opts.dim);
	Sampler rng(suite_seed(opts, "closed-forms"));
	const auto ops = q_algebra_ops(ctx);
	const MatPoly zero(ctx.dim);
	const int N = std::max(opts.order, 4);
	const int heavy = std::max(4, opts.samples / 8);
	std::vector<LawReport> out;

	out.push_back(law("w-map-closed-form", heavy, [&](int) {
		Mat a = rng.mat(ctx.dim);
		LamSeries w =
		    w_map(ops, LamSeries::embed(MatPoly::constant(a), 1, N, zero));
		for (int n = 1; n <= N; ++n)
		{
			Rat c = rat_pow(Rat(1) - ctx.q, n - 1) / factorial(n);
			MatPoly want = MatPoly::monomial(n - 1, c * mat_pow(a, n));
			if (w.grade(n) != want)
				return std::optional<json>{
				    json{{"grade", n}, {"got", to_json(w.grade(n))}}};
		}
		return std::optional<json>{};
	}));

	out.push_back(law("omega-closed-form", heavy, [&](int) {
		Mat a = rng.mat(ctx.dim);
		LamSeries omega =
		    omega_prime(ops, LamSeries::embed(MatPoly::constant(a), 1, N, zero));
		if (omega == omega_prime_closed_form(ctx, a, N))
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(a)}}};
	}));

	out.push_back(law("exp-of-integrated-omega", heavy, [&](int) {
		Mat a = rng.mat(ctx.dim);
		MagnusConfig cfg(ctx, N, MatPoly::constant(a));
		auto sol = q_magnus_solution(cfg);
		bool ok = sol.omega_q == omega_q_closed_form(ctx, a, N) &&
		          exp_pointwise(ops, sol.omega_q) ==
		              q_exp_big_graded(ctx, a, N);
		MagnusConfig neg(ctx, N, MatPoly::constant(-a));
		auto nsol = q_magnus_solution(neg);
		ok = ok && exp_pointwise(ops, -nsol.omega_q) ==
		               q_exp_small_graded(ctx, a, N);
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(a)}}};
	}));

	out.push_back(law("integrated-solutions", heavy, [&](int) {
		Mat a = rng.mat(ctx.dim);
		MatPoly pa = MatPoly::constant(a);
		MagnusConfig cfg(ctx, N, pa);
		auto sol = q_magnus_solution(cfg);

		// Yhat = 1 - I_q(Yhat a), grade by grade.
		LamSeries rhsY(N, zero);
		rhsY.set_grade(0, MatPoly::one(ctx.dim));
		for (int n = 1; n <= N; ++n)
			rhsY.set_grade(
			    n, -jackson_integral(ctx, sol.Yhat.grade(n - 1) * pa));

		// Xhat = 1 + q^{-1} I_q(a Phi(Xhat)).
		LamSeries rhsX(N, zero);
		rhsX.set_grade(0, MatPoly::one(ctx.dim));
		for (int n = 1; n <= N; ++n)
			rhsX.set_grade(
			    n, ctx.q.inv() * jackson_integral(
			                         ctx, pa * phi_q(ctx, sol.Xhat.grade(n - 1))));

		if (sol.Yhat == rhsY && sol.Xhat == rhsX)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(a)}}};
	}));

	return out;
}

// --- symbolic q-BCH ---------------------------------------------------

std::vector<LawReport> suite_qbch(const VerifyOptions &opts)
{
	Sampler rng(suite_seed(opts, "q-bch"));
	const int N = std::max(3, std::min(opts.order, 6));
	std::vector<LawReport> out;
	const Rat q = opts.q;
	QContext qc(q, 1);

	auto bch = q_bch(q, N);
	FreeSeries x = FreeSeries::generator('x', N);
	FreeSeries y = FreeSeries::generator('y', N);

	{
		LawReport rep;
		rep.name = "displayed-degrees";
		rep.samples = 3;
		if (bch.by_degree[1] != x + y)
			rep.failures.push_back({{"degree", 1}});
		Rat c2 = -q_number(qc, 2).inv();
		if (bch.by_degree[2] != c2 * q_commutator(q, y, x))
			rep.failures.push_back({{"degree", 2}});
		Rat c3 = -q / (q_number(qc, 2) * q_factorial(qc, 3));
		FreeSeries want3 =
		    c3 * (q_commutator(q, q_commutator(q, x, y), x) +
		          q_commutator(q, y, q_commutator(q, x, y)));
		if (bch.by_degree[3] != want3)
			rep.failures.push_back({{"degree", 3}});
		out.push_back(std::move(rep));
	}

	{
		LawReport rep;
		rep.name = "exponential-product-identity";
		rep.samples = 1;
		FreeSeries lhs = free_q_exp(q, x) * free_q_exp(q, y);
		if (lhs != free_q_exp(q, bch.terms))
			rep.failures.push_back({{"order", N}});
		out.push_back(std::move(rep));
	}

	{
		LawReport rep;
		rep.name = "homogeneity";
		rep.samples = N;
		for (int d = 0; d <= N; ++d)
			for (const auto &[w, c] : bch.by_degree[static_cast<std::size_t>(d)]
			                              .terms())
				if (static_cast<int>(w.size()) != d)
					rep.failures.push_back({{"degree", d}, {"word", w}});
		out.push_back(std::move(rep));
	}

	out.push_back(law("log-inverts-exp", 16, [&](int) {
		FreeSeries z(N);
		for (const char *w : {"x", "y", "xy", "yx", "xx", "xyx"})
			z.set(w, rng.small_rat());
		FreeSeries s = free_q_exp(q, z);
		if (free_q_log(q, s) == z && free_q_exp(q, free_q_log(q, s)) == s)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(z)}}};
	}));

	{
		// yx = q xy kills every component of degree >= 2, making the
		// product of q-exponentials a single q-exponential.
		LawReport rep;
		rep.name = "q-commuting-pair";
		rep.samples = 1;
		Mat xv(2), yv(2);
		xv.at(0, 0) = Rat(1);
		xv.at(1, 1) = q;
		yv.at(0, 1) = Rat(1);
		if (!(yv * xv == q * (xv * yv)))
			rep.failures.push_back({{"setup", "pair does not q-commute"}});
		for (int d = 2; d <= N; ++d)
		{
			Mat v = free_eval(bch.by_degree[static_cast<std::size_t>(d)], xv, yv);
			if (!v.is_zero())
				rep.failures.push_back({{"degree", d}, {"value", to_json(v)}});
		}
		out.push_back(std::move(rep));
	}

	out.push_back(law("matrix-evaluation-oracle", 8, [&](int) {
		Mat A = rng.mat(opts.dim), B = rng.mat(opts.dim);
		auto mops = AlgebraOps<Mat>::associative(
		    Mat(opts.dim), Mat::identity(opts.dim),
		    [](const Mat &u, const Mat &v) { return u * v; });
		Graded<Mat> ga = Graded<Mat>::embed(A, 1, N, Mat(opts.dim));
		Graded<Mat> gb = Graded<Mat>::embed(B, 1, N, Mat(opts.dim));
		Graded<Mat> prod = graded_mul(q_exp_graded(mops, ga, q),
		                              q_exp_graded(mops, gb, q),
		                              DendOp::pointwise, mops);
		Graded<Mat> z = q_log_graded(mops, prod, q);
		for (int d = 1; d <= N; ++d)
			if (free_eval(bch.by_degree[static_cast<std::size_t>(d)], A, B) !=
			    z.grade(d))
				return std::optional<json>{json{{"degree", d}}};
		return std::optional<json>{};
	}));

	if (q == Rat(1))
	{
		LawReport rep;
		rep.name = "classical-degrees";
		rep.samples = 3;
		auto comm = [&](const FreeSeries &a, const FreeSeries &b) {
			return a * b - b * a;
		};
		if (bch.by_degree[1] != x + y)
			rep.failures.push_back({{"degree", 1}});
		if (bch.by_degree[2] != Rat(1, 2) * comm(x, y))
			rep.failures.push_back({{"degree", 2}});
		FreeSeries want3 = Rat(1, 12) * (comm(x, comm(x, y)) +
		                                 comm(y, comm(y, x)));
		if (bch.by_degree[3] != want3)
			rep.failures.push_back({{"degree", 3}});
		out.push_back(std::move(rep));
	}
	else
	{
		// Degree-wise q -> 1 limit, cross-checked against the BCH series
		// computed by exp*/log* in the free algebra.
		LawReport rep;
		rep.name = "classical-crosscheck";
		rep.samples = 1;
		auto fops = AlgebraOps<FreeSeries>::associative(
		    FreeSeries(N), FreeSeries::unit(N),
		    [](const FreeSeries &a, const FreeSeries &b) { return a * b; });
		auto c1 = q_bch(Rat(1), N);
		Graded<FreeSeries> gx =
		    Graded<FreeSeries>::embed(x, 1, N, FreeSeries(N));
		Graded<FreeSeries> gy =
		    Graded<FreeSeries>::embed(y, 1, N, FreeSeries(N));
		Graded<FreeSeries> cl = bch_classical(fops, gx, gy);
		for (int d = 1; d <= N; ++d)
			if (c1.by_degree[static_cast<std::size_t>(d)] != cl.grade(d))
				rep.failures.push_back({{"degree", d}});
		out.push_back(std::move(rep));
	}

	return out;
}

// --- q-difference equations -------------------------------------------

std::vector<LawReport> suite_qdifference(const VerifyOptions &opts)
{
	QContext ctx(opts.q, opts.dim);
	Sampler rng(suite_seed(opts, "q-difference"));
	std::vector<LawReport> out;
	const int N = std::max(opts.order, 10);

	out.push_back(law("exponential-inverse-pair", 8, [&](int i) {
		Mat U = i == 0 ? Mat::identity(ctx.dim) : rng.mat(ctx.dim);
		MatPoly prod = (q_exp_small(ctx, U, N) * q_exp_big(ctx, -U, N))
		                   .truncated(N);
		if (prod == MatPoly::one(ctx.dim))
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(U)}}};
	}));

	out.push_back(law("constant-solutions", 8, [&](int) {
		Mat U = rng.mat(ctx.dim);
		// X = E_q(tU) solves the dilation-twisted equation, Y = e_q(tV)
		// the plain one; checked through the truncation degree.
		MatPoly X = q_exp_big(ctx, U, N);
		MatPoly lhsX = q_derive(ctx, X);
		MatPoly rhsX =
		    (MatPoly::constant(U) * q_dilate(ctx, X)).truncated(N - 1);
		MatPoly Y = q_exp_small(ctx, U, N);
		MatPoly lhsY = q_derive(ctx, Y);
		MatPoly rhsY = (Y * MatPoly::constant(U)).truncated(N - 1);
		if (lhsX == rhsX && lhsY == rhsY)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(U)}}};
	}));

	if (ctx.classical())
	{
		out.push_back(skipped("product-vs-series",
		                      "the infinite product requires q < 1"));
	}
	else
	{
		LawReport rep;
		rep.name = "product-vs-series";
		rep.samples = 1;
		// Pinned desk-scale instance with a geometric tail bound.
		QContext half(Rat(1, 2), 1);
		Mat one1 = Mat::identity(1);
		auto chk = q_difference_check(half, one1, Rat(1, 2), 20, 20);
		Rat bound = rat_pow(Rat(1, 2), 20);
		if (!chk.pass || !(chk.residual < bound))
			rep.failures.push_back({{"residual", chk.residual.str()},
			                        {"bound", bound.str()}});
		out.push_back(std::move(rep));
	}

	return out;
}

// --- the product chain of q-exponentials ------------------------------

std::vector<LawReport> suite_bch_chain(const VerifyOptions &opts)
{
	QContext ctx(opts.q, opts.dim);
	Sampler rng(suite_seed(opts, "bch-chain"));
	std::vector<LawReport> out;

	out.push_back(law("noncommuting-chain", 4, [&](int) {
		auto [a, b] = rng.noncommuting_pair(ctx.dim);
		auto chk = q_bch_transfer_check(ctx, a, b, opts.order);
		if (chk.pass)
			return std::optional<nlohmann::json>{};
		return std::optional<nlohmann::json>{
		    json{{"a", to_json(a)}, {"b", to_json(b)},
		         {"residual", chk.residual.str()}}};
	}));

	out.push_back(law("commuting-corollary", 4, [&](int) {
		auto [a, b] = rng.commuting_pair(ctx.dim);
		auto chk = q_bch_transfer_check(ctx, a, b, std::max(opts.order, 8));
		if (chk.pass)
			return std::optional<nlohmann::json>{};
		return std::optional<nlohmann::json>{
		    json{{"a", to_json(a)}, {"b", to_json(b)},
		         {"residual", chk.residual.str()}}};
	}));

	return out;
}

// --- appendix: difference calculus -------------------------------------

std::vector<LawReport> suite_appendix(const VerifyOptions &opts)
{
	Sampler rng(suite_seed(opts, "appendix"));
	const Rat h(1, 2);
	const int len = 17;
	const int dim = opts.dim;
	std::vector<LawReport> out;

	auto random_grid = [&](int d) {
		GridFn f(h, len, d);
		for (int j = 0; j < len; ++j)
			f.at(j) = rng.mat(d);
		return f;
	};

	out.push_back(law("modified-leibniz", opts.samples, [&](int) {
		GridFn f = random_grid(dim), g = random_grid(dim);
		GridFn lhs = diff_h(f * g);
		GridFn rhs = diff_h(f) * g.truncated(len - 1) +
		             f.truncated(len - 1) * diff_h(g) +
		             h * (diff_h(f) * diff_h(g));
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{
		    json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}}};
	}));

	out.push_back(law("difference-inverts-sum", opts.samples, [&](int) {
		GridFn f = random_grid(dim);
		bool ok = diff_h(sum_h(f)) == f.truncated(len - 1);
		// S_h D_h f = f - f(0) on the shortened grid.
		GridFn sd = sum_h(diff_h(f));
		GridFn want = (f - GridFn::constant(h, len, f.at(0))).truncated(len - 1);
		ok = ok && sd == want;
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(f)}}};
	}));

	out.push_back(law("weight-h-rota-baxter-scalar", opts.samples, [&](int) {
		GridFn f = random_grid(1), g = random_grid(1);
		if (rb_check_h(f, g).passed())
			return std::optional<json>{};
		return std::optional<json>{
		    json{{"f", to_json(f)}, {"g", to_json(g)}}};
	}));

	{
		std::vector<std::array<GridFn, 3>> triples;
		for (int i = 0; i < opts.samples / 2; ++i)
			triples.push_back({random_grid(dim), random_grid(dim),
			                   random_grid(dim)});
		std::function<json(const GridFn &)> dump = [](const GridFn &f) {
			return to_json(f);
		};
		auto axioms = check_twisted_axioms<GridFn>(
		    h_algebra_ops(h, len, dim), triples, dump);
		for (auto &rep : axioms)
		{
			rep.name = "ordinary-dendriform-" + rep.name;
			out.push_back(std::move(rep));
		}
	}

	out.push_back(law("grid-pre-lie", opts.samples / 2, [&](int) {
		const auto ops = h_algebra_ops(h, len, dim);
		GridFn a = random_grid(dim), b = random_grid(dim), c = random_grid(dim);
		GridFn lhs = ops.prelie(ops.prelie(a, b), c) -
		             ops.prelie(a, ops.prelie(b, c));
		GridFn rhs = ops.prelie(ops.prelie(b, a), c) -
		             ops.prelie(b, ops.prelie(a, c));
		if (lhs == rhs)
			return std::optional<json>{};
		return std::optional<json>{json{{"a", to_json(a)}}};
	}));

	out.push_back(law("forward-solution", 8, [&](int i) {
		GridFn U = random_grid(dim);
		GridFn F = solve_fd(U);
		// D_h F = F U on the interior, and the summed form is exact.
		bool ok = diff_h(F) == (F * U).truncated(len - 1);
		ok = ok && F == GridFn::ones(h, len, dim) + sum_h(F * U);
		ok = ok && solve_fd_dendriform(U) == F;
		if (i == 0)
		{
			// scalar constant c: F(jh) = (1 + hc)^j
			Rat c(3);
			GridFn cu = GridFn::constant(h, len, c * Mat::identity(1));
			GridFn cf = solve_fd(cu);
			for (int j = 0; j < len; ++j)
				if (cf.at(j).at(0, 0) != rat_pow(Rat(1) + h * c, j))
					ok = false;
		}
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(U)}}};
	}));

	return out;
}

// --- classical limit ----------------------------------------------------

std::vector<LawReport> suite_classical(const VerifyOptions &opts)
{
	QContext ctx(Rat(1), opts.dim);
	Sampler rng(suite_seed(opts, "classical-limit"));
	const auto ops = q_algebra_ops(ctx);
	const MatPoly zero(ctx.dim);
	std::vector<LawReport> out;

	out.push_back(law("riemann-degeneration", opts.samples, [&](int) {
		MatPoly f = rng.poly(ctx.dim, 3);
		MatPoly integral(ctx.dim);
		for (const auto &[k, a] : f.coeffs())
			integral.set_coeff(k + 1, Rat(1, k + 1) * a);
		bool ok = jackson_integral(ctx, f) == integral &&
		          phi_q(ctx, f) == f && q_dilate(ctx, f) == f;
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(f)}}};
	}));

	out.push_back(law("classical-first-grades", 8, [&](int) {
		MatPoly u = MatPoly::constant(rng.mat(ctx.dim));
		LamSeries omega = omega_prime(ops, LamSeries::embed(u, 1, 4, zero));
		auto pl = [&](const MatPoly &f, const MatPoly &g) {
			return pre_lie(ctx, f, g);
		};
		MatPoly uu = pl(u, u);
		MatPoly g2 = Rat(-1, 2) * uu;
		MatPoly g3 = Rat(1, 4) * pl(uu, u) + Rat(1, 12) * pl(u, uu);
		MatPoly g4 = Rat(-1, 6) * pl(pl(uu, u), u) +
		             Rat(-1, 12) * pl(u, pl(uu, u));
		bool ok = omega.grade(1) == u && omega.grade(2) == g2 &&
		          omega.grade(3) == g3 && omega.grade(4) == g4;
		if (ok)
			return std::optional<json>{};
		return std::optional<json>{json{{"input", to_json(u)}}};
	}));

	return out;
}

} // namespace

std::vector<std::string> verify_suite_names()
{
	return {"q-calculus",   "rota-baxter",  "dendriform-axioms",
	        "pre-lie",      "magnus",       "closed-forms",
	        "q-bch",        "q-difference", "bch-chain",
	        "appendix",     "classical-limit"};
}

std::vector<LawReport> run_verify_suite(const std::string &name,
                                        const VerifyOptions &opts)
{
	if (name == "q-calculus")
		return suite_qcalc(opts);
	if (name == "rota-baxter")
		return suite_rota_baxter(opts);
	if (name == "dendriform-axioms")
		return suite_dendriform(opts);
	if (name == "pre-lie")
		return suite_prelie(opts);
	if (name == "magnus")
		return suite_magnus(opts);
	if (name == "closed-forms")
		return suite_closed_forms(opts);
	if (name == "q-bch")
		return suite_qbch(opts);
	if (name == "q-difference")
		return suite_qdifference(opts);
	if (name == "bch-chain")
		return suite_bch_chain(opts);
	if (name == "appendix")
		return suite_appendix(opts);
	if (name == "classical-limit")
		return suite_classical(opts);
	throw PreconditionError("unknown suite \"" + name + "\"");
}

std::vector<LawReport> run_verify_all(const VerifyOptions &opts)
{
	std::vector<LawReport> out;
	for (const auto &name : verify_suite_names())
	{
		auto reports = run_verify_suite(name, opts);
		for (auto &rep : reports)
		{
			rep.name = name + "/" + rep.name;
			out.push_back(std::move(rep));
		}
	}
	return out;
}

} // namespace qmagnus
