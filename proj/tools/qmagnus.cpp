#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qmagnus/finitediff.hpp"
#include "qmagnus/json_io.hpp"
#include "qmagnus/magnus.hpp"
#include "qmagnus/qbch.hpp"
#include "qmagnus/verify.hpp"

namespace {

using nlohmann::json;
using namespace qmagnus;

struct CommonOpts {
	std::string q = "1/2";
	int order = 8;
	int dim = 2;
	std::uint64_t seed = 42;
	std::string input;
	std::string output;
	std::string format = "json";
};

void add_common(CLI::App *cmd, CommonOpts &o, bool with_input)
{
	cmd->add_option("--q", o.q, "deformation parameter as \"p/r\", 0 < q <= 1");
	cmd->add_option("--order", o.order, "truncation order");
	cmd->add_option("--dim", o.dim, "matrix dimension");
	cmd->add_option("--seed", o.seed, "seed for randomized checks");
	if (with_input)
		cmd->add_option("--input", o.input,
		                "inline JSON (matrix or polynomial) or a file path");
	cmd->add_option("--output", o.output, "output file (default: stdout)");
	cmd->add_option("--format", o.format, "json | csv | text")
	    ->check(CLI::IsMember({"json", "csv", "text"}));
}

json load_input(const std::string &spec)
{
	if (spec.empty())
		throw ParseError("--input is required");
	if (spec.front() == '[' || spec.front() == '{')
		return json::parse(spec);
	std::ifstream in(spec);
	if (!in)
		throw ParseError("cannot open input file \"" + spec + "\"");
	json j;
	in >> j;
	return j;
}

MatPoly input_poly(const json &j, int dim)
{
	MatPoly p = j.is_array() ? MatPoly::constant(mat_from_json(j))
	                         : matpoly_from_json(j);
	if (p.dim() != dim)
		throw DimensionError("input dimension does not match --dim");
	return p;
}

void emit(const CommonOpts &o, const std::string &text)
{
	if (o.output.empty())
	{
		std::cout << text << "\n";
		return;
	}
	std::ofstream out(o.output);
	if (!out)
		throw ParseError("cannot open output file \"" + o.output + "\"");
	out << text << "\n";
}

std::string series_csv(const std::vector<std::pair<std::string, LamSeries>> &tables)
{
	std::ostringstream out;
	out << "series,grade,t_degree,row,col,value\n";
	for (const auto &[name, s] : tables)
		for (int n = 0; n <= s.order(); ++n)
			for (const auto &[k, m] : s.grade(n).coeffs())
				for (int r = 0; r < m.dim(); ++r)
					for (int c = 0; c < m.dim(); ++c)
						if (!m.at(r, c).is_zero())
							out << name << ',' << n << ',' << k << ',' << r
							    << ',' << c << ',' << m.at(r, c).str() << '\n';
	std::string text = out.str();
	text.pop_back();
	return text;
}

std::string series_text(const std::vector<std::pair<std::string, LamSeries>> &tables)
{
	std::ostringstream out;
	for (const auto &[name, s] : tables)
	{
		out << name << " (order " << s.order() << ")\n";
		if (!s.unit().is_zero())
			out << "  grade 0: " << s.unit().str() << " * unit\n";
		for (int n = 0; n <= s.order(); ++n)
		{
			if (s.grade(n).is_zero())
				continue;
			out << "  grade " << n << ":";
			for (const auto &[k, m] : s.grade(n).coeffs())
			{
				out << "  t^" << k << " [";
				for (int r = 0; r < m.dim(); ++r)
				{
					out << (r ? "; " : "");
					for (int c = 0; c < m.dim(); ++c)
						out << (c ? " " : "") << m.at(r, c).str();
				}
				out << "]";
			}
			out << "\n";
		}
	}
	std::string text = out.str();
	if (!text.empty())
		text.pop_back();
	return text;
}

void emit_series(const CommonOpts &o,
                 const std::vector<std::pair<std::string, LamSeries>> &tables)
{
	if (o.format == "csv")
	{
		emit(o, series_csv(tables));
		return;
	}
	if (o.format == "text")
	{
		emit(o, series_text(tables));
		return;
	}
	json j = json::object();
	for (const auto &[name, s] : tables)
		j[name] = to_json(s);
	emit(o, j.dump(2));
}

int cmd_magnus(const CommonOpts &o)
{
	QContext ctx(Rat::parse(o.q), o.dim);
	MagnusConfig cfg(ctx, o.order, input_poly(load_input(o.input), o.dim));
	auto sol = q_magnus_solution(cfg);
	LamSeries u = LamSeries::embed(cfg.input, 1, o.order, MatPoly(o.dim));
	LamSeries w = w_map(q_algebra_ops(ctx), u);
	emit_series(o, {{"omega_prime", sol.omega},
	                {"omega_q", sol.omega_q},
	                {"w", w}});
	return 0;
}

int cmd_solve(const CommonOpts &o)
{
	QContext ctx(Rat::parse(o.q), o.dim);
	MagnusConfig cfg(ctx, o.order, input_poly(load_input(o.input), o.dim));
	auto sol = q_magnus_solution(cfg);
	emit_series(o, {{"X", sol.X},
	                {"Y", sol.Y},
	                {"Xhat", sol.Xhat},
	                {"Yhat", sol.Yhat}});
	return 0;
}

int cmd_qbch(const CommonOpts &o)
{
	auto r = q_bch(Rat::parse(o.q), o.order);
	if (o.format == "text")
	{
		std::ostringstream out;
		for (int d = 1; d <= r.order; ++d)
			out << "degree " << d << ": " << render_q_brackets(r, d)
			    << (d < r.order ? "\n" : "");
		emit(o, out.str());
		return 0;
	}
	json degrees = json::array();
	for (int d = 1; d <= r.order; ++d)
		degrees.push_back(
		    {{"degree", d},
		     {"terms", to_json(r.by_degree[static_cast<std::size_t>(d)])["terms"]},
		     {"rendered", render_q_brackets(r, d)}});
	json j = {{"q", r.q.str()}, {"order", r.order}, {"degrees", degrees}};
	emit(o, j.dump(2));
	return 0;
}

int cmd_fd(const CommonOpts &o, const std::string &h_str, int steps)
{
	Rat h = Rat::parse(h_str);
	json in = load_input(o.input);
	GridFn U = in.is_object()
	               ? gridfn_from_json(in)
	               : GridFn::constant(h, steps + 1, mat_from_json(in));
	if (U.h() != h)
		throw PreconditionError("grid step in input differs from --h");
	GridFn F = solve_fd(U);
	if (o.format == "csv")
	{
		std::ostringstream out;
		out << "j,t";
		for (int r = 0; r < F.dim(); ++r)
			for (int c = 0; c < F.dim(); ++c)
				out << ",v" << r << c;
		out << "\n";
		Rat t(0);
		for (int j = 0; j < F.length(); ++j, t += h)
		{
			out << j << ',' << t.str();
			for (int r = 0; r < F.dim(); ++r)
				for (int c = 0; c < F.dim(); ++c)
					out << ',' << F.at(j).at(r, c).str();
			out << (j + 1 < F.length() ? "\n" : "");
		}
		emit(o, out.str());
		return 0;
	}
	if (o.format == "text")
	{
		std::ostringstream out;
		Rat t(0);
		for (int j = 0; j < F.length(); ++j, t += h)
		{
			out << "t = " << t.str() << ": [";
			for (int r = 0; r < F.dim(); ++r)
			{
				out << (r ? "; " : "");
				for (int c = 0; c < F.dim(); ++c)
					out << (c ? " " : "") << F.at(j).at(r, c).str();
			}
			out << "]" << (j + 1 < F.length() ? "\n" : "");
		}
		emit(o, out.str());
		return 0;
	}
	emit(o, to_json(F).dump(2));
	return 0;
}

int cmd_verify(const CommonOpts &o, const std::vector<std::string> &suites,
               int samples)
{
	VerifyOptions opts;
	opts.q = Rat::parse(o.q);
	opts.order = o.order;
	opts.dim = o.dim;
	opts.seed = o.seed;
	opts.samples = samples;

	std::vector<LawReport> reports;
	if (suites.empty())
		reports = run_verify_all(opts);
	else
		for (const auto &name : suites)
			for (auto &rep : run_verify_suite(name, opts))
			{
				rep.name = name + "/" + rep.name;
				reports.push_back(std::move(rep));
			}

	bool all_pass = true;
	for (const auto &rep : reports)
		if (!rep.skipped && !rep.passed())
			all_pass = false;

	if (o.format == "text")
	{
		std::ostringstream out;
		for (const auto &rep : reports)
			out << (rep.skipped ? "SKIP" : rep.passed() ? "PASS" : "FAIL")
			    << "  " << rep.name
			    << (rep.note.empty() ? "" : "  (" + rep.note + ")") << "\n";
		out << (all_pass ? "all laws hold" : "FAILURES PRESENT");
		emit(o, out.str());
	}
	else
	{
		json j = {{"q", o.q},
		          {"order", o.order},
		          {"dim", o.dim},
		          {"seed", o.seed},
		          {"samples", samples},
		          {"pass", all_pass},
		          {"laws", reports}};
		emit(o, j.dump(2));
	}
	return all_pass ? 0 : 1;
}

int cmd_check(const CommonOpts &o)
{
	QContext ctx(Rat::parse(o.q), o.dim);
	Sampler rng(o.seed);
	std::vector<CheckReport> checks;

	if (!ctx.classical())
	{
		QContext scalar(ctx.q, 1);
		checks.push_back(q_difference_check(scalar, Mat::identity(1),
		                                    Rat(1, 2), 20, o.order + 12));
	}
	auto [a, b] = rng.noncommuting_pair(ctx.dim);
	checks.push_back(q_bch_transfer_check(ctx, a, b, o.order));
	auto [c, d] = rng.commuting_pair(ctx.dim);
	checks.push_back(q_bch_transfer_check(ctx, c, d, o.order));

	bool all_pass = true;
	for (const auto &chk : checks)
		all_pass = all_pass && chk.pass;

	if (o.format == "text")
	{
		std::ostringstream out;
		for (const auto &chk : checks)
			out << (chk.pass ? "PASS" : "FAIL") << "  " << chk.name
			    << "  residual " << chk.residual.str() << " ("
			    << approx_str(chk.residual) << ")"
			    << (chk.note.empty() ? "" : "  " + chk.note) << "\n";
		out << (all_pass ? "all checks pass" : "FAILURES PRESENT");
		emit(o, out.str());
	}
	else
	{
		json j = {{"q", o.q}, {"pass", all_pass}, {"checks", checks}};
		emit(o, j.dump(2));
	}
	return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact twisted dendriform algebra and q-integral Magnus toolkit"};
	app.require_subcommand(1);

	CommonOpts mo, so, qo, vo, fo, co;
	std::string fd_h = "1/2";
	int fd_steps = 16;
	std::vector<std::string> suites;
	int samples = 64;

	auto *magnus = app.add_subcommand(
	    "magnus", "expansion tables for a constant or polynomial input");
	add_common(magnus, mo, true);

	auto *solve = app.add_subcommand(
	    "solve", "solutions of the linear dendriform and q-integral equations");
	add_common(solve, so, true);

	auto *qbch = app.add_subcommand("qbch", "symbolic q-BCH coefficients");
	qo.order = 5;
	add_common(qbch, qo, false);

	auto *verify = app.add_subcommand("verify", "run the law suites");
	vo.order = 6;
	add_common(verify, vo, false);
	verify->add_option("--suite", suites,
	                   "suite name (repeatable; default: all)")
	    ->check(CLI::IsMember(qmagnus::verify_suite_names()));
	verify->add_option("--samples", samples, "samples per law");

	auto *fd = app.add_subcommand("fd", "appendix difference-equation solver");
	add_common(fd, fo, true);
	fd->add_option("--h", fd_h, "grid step as \"p/r\"");
	fd->add_option("--steps", fd_steps, "number of grid steps K");

	auto *check = app.add_subcommand(
	    "check", "numeric product-vs-series and exponential-chain checks");
	add_common(check, co, false);

	try
	{
		app.parse(argc, argv);
		if (magnus->parsed())
			return cmd_magnus(mo);
		if (solve->parsed())
			return cmd_solve(so);
		if (qbch->parsed())
			return cmd_qbch(qo);
		if (verify->parsed())
			return cmd_verify(vo, suites, samples);
		if (fd->parsed())
			return cmd_fd(fo, fd_h, fd_steps);
		if (check->parsed())
			return cmd_check(co);
	}
	catch (const CLI::CallForHelp &e)
	{
		return app.exit(e);
	}
	catch (const CLI::ParseError &e)
	{
		app.exit(e);
		return 2;
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
