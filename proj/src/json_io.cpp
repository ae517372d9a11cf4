#include "qmagnus/json_io.hpp"

#include <cstdio>

namespace qmagnus {

using nlohmann::json;

void to_json(json &j, const Rat &r) { j = r.str(); }

void to_json(json &j, const Mat &m)
{
	j = json::array();
	for (int i = 0; i < m.dim(); ++i)
	{
		json row = json::array();
		for (int k = 0; k < m.dim(); ++k)
			row.push_back(m.at(i, k).str());
		j.push_back(std::move(row));
	}
}

void to_json(json &j, const MatPoly &p)
{
	json coeffs = json::array();
	for (const auto &[k, a] : p.coeffs())
		coeffs.push_back({{"degree", k}, {"matrix", to_json(a)}});
	j = {{"dim", p.dim()}, {"coeffs", std::move(coeffs)}};
}

void to_json(json &j, const LamSeries &s)
{
	json grades = json::array();
	int dim = 1;
	for (int n = 0; n <= s.order(); ++n)
	{
		dim = s.grade(n).dim();
		if (!s.grade(n).is_zero())
			grades.push_back(
			    {{"grade", n}, {"coeffs", to_json(s.grade(n))["coeffs"]}});
	}
	j = {{"dim", dim},
	     {"order", s.order()},
	     {"unit", s.unit().str()},
	     {"grades", std::move(grades)}};
}

void to_json(json &j, const FreeSeries &s)
{
	json terms = json::object();
	for (const auto &[w, c] : s.terms())
		terms[w] = c.str();
	j = {{"order", s.order()}, {"terms", std::move(terms)}};
}

void to_json(json &j, const GridFn &f)
{
	json values = json::array();
	for (int k = 0; k < f.length(); ++k)
		values.push_back(to_json(f.at(k)));
	j = {{"h", f.h().str()}, {"dim", f.dim()}, {"values", std::move(values)}};
}

void to_json(json &j, const LawReport &r)
{
	j = {{"law", r.name},
	     {"samples", r.samples},
	     {"failures", r.failures},
	     {"skipped", r.skipped},
	     {"passed", r.passed()}};
	if (!r.note.empty())
		j["note"] = r.note;
}

void to_json(json &j, const CheckReport &r)
{
	j = {{"check", r.name},
	     {"pass", r.pass},
	     {"residual", r.residual.str()},
	     {"residual_approx", approx_str(r.residual)}};
	if (r.has_bound)
	{
		j["bound"] = r.bound.str();
		j["bound_approx"] = approx_str(r.bound);
	}
	if (!r.note.empty())
		j["note"] = r.note;
}

Rat rat_from_json(const json &j)
{
	if (j.is_string())
		return Rat::parse(j.get<std::string>());
	if (j.is_number_integer())
		return Rat(j.get<long long>());
	throw ParseError("expected a rational as \"p/q\" string or integer");
}

Mat mat_from_json(const json &j)
{
	if (!j.is_array() || j.empty())
		throw ParseError("expected a non-empty array of matrix rows");
	const int dim = static_cast<int>(j.size());
	Mat m(dim);
	for (int i = 0; i < dim; ++i)
	{
		const json &row = j[static_cast<std::size_t>(i)];
		if (!row.is_array() || static_cast<int>(row.size()) != dim)
			throw ParseError("matrix rows must form a square array");
		for (int k = 0; k < dim; ++k)
			m.at(i, k) = rat_from_json(row[static_cast<std::size_t>(k)]);
	}
	return m;
}

MatPoly matpoly_from_json(const json &j)
{
	if (!j.is_object() || !j.contains("dim") || !j.contains("coeffs"))
		throw ParseError("expected {dim, coeffs} for a polynomial");
	MatPoly p(j.at("dim").get<int>());
	for (const auto &entry : j.at("coeffs"))
		p.set_coeff(entry.at("degree").get<int>(),
		            mat_from_json(entry.at("matrix")));
	return p;
}

LamSeries lamseries_from_json(const json &j)
{
	if (!j.is_object() || !j.contains("dim") || !j.contains("order"))
		throw ParseError("expected {dim, order, unit, grades} for a series");
	const int dim = j.at("dim").get<int>();
	const int order = j.at("order").get<int>();
	LamSeries s(order, MatPoly(dim));
	if (j.contains("unit"))
		s.set_unit(rat_from_json(j.at("unit")));
	for (const auto &entry : j.at("grades"))
	{
		MatPoly p(dim);
		for (const auto &c : entry.at("coeffs"))
			p.set_coeff(c.at("degree").get<int>(),
			            mat_from_json(c.at("matrix")));
		s.set_grade(entry.at("grade").get<int>(), std::move(p));
	}
	return s;
}

FreeSeries freeseries_from_json(const json &j)
{
	if (!j.is_object() || !j.contains("order") || !j.contains("terms"))
		throw ParseError("expected {order, terms} for a free series");
	FreeSeries s(j.at("order").get<int>());
	for (const auto &[w, c] : j.at("terms").items())
		s.set(w, rat_from_json(c));
	return s;
}

GridFn gridfn_from_json(const json &j)
{
	if (!j.is_object() || !j.contains("h") || !j.contains("values"))
		throw ParseError("expected {h, values} for a grid function");
	const json &values = j.at("values");
	if (!values.is_array() || values.empty())
		throw ParseError("grid needs at least one value");
	Rat h = rat_from_json(j.at("h"));
	Mat first = mat_from_json(values[0]);
	GridFn f(h, static_cast<int>(values.size()), first.dim());
	f.at(0) = first;
	for (int k = 1; k < f.length(); ++k)
		f.at(k) = mat_from_json(values[static_cast<std::size_t>(k)]);
	return f;
}

std::string approx_str(const Rat &r)
{
	char buf[64];
	std::snprintf(buf, sizeof(buf), "%.6g", r.approx());
	return buf;
}

} // namespace qmagnus
