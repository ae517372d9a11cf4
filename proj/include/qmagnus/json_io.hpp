#pragma once

#include "json.hpp"

#include "qmagnus/finitediff.hpp"
#include "qmagnus/free_series.hpp"
#include "qmagnus/magnus.hpp"
#include "qmagnus/matpoly.hpp"
#include "qmagnus/report.hpp"

namespace qmagnus {

// Rationals cross every boundary as strings "p" or "p/q"; integral JSON
// numbers are accepted on input, floating-point numbers are rejected.

void to_json(nlohmann::json &j, const Rat &r);
void to_json(nlohmann::json &j, const Mat &m);
void to_json(nlohmann::json &j, const MatPoly &p);
void to_json(nlohmann::json &j, const LamSeries &s);
void to_json(nlohmann::json &j, const FreeSeries &s);
void to_json(nlohmann::json &j, const GridFn &f);
void to_json(nlohmann::json &j, const LawReport &r);
void to_json(nlohmann::json &j, const CheckReport &r);

template <class T> nlohmann::json to_json(const T &v)
{
	nlohmann::json j;
	to_json(j, v);
	return j;
}

Rat rat_from_json(const nlohmann::json &j);
Mat mat_from_json(const nlohmann::json &j);
MatPoly matpoly_from_json(const nlohmann::json &j);
LamSeries lamseries_from_json(const nlohmann::json &j);
FreeSeries freeseries_from_json(const nlohmann::json &j);
GridFn gridfn_from_json(const nlohmann::json &j);

/// Deterministic decimal rendering of a rational, reporting only.
std::string approx_str(const Rat &r);

} // namespace qmagnus
