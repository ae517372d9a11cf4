#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qmagnus/rational.hpp"

namespace qmagnus {

/// Outcome of checking one law on a batch of samples. Failures carry the
/// offending inputs and both sides, pre-rendered to JSON so reports stay
/// carrier-agnostic.
struct LawReport {
	std::string name;
	int samples = 0;
	std::vector<nlohmann::json> failures;
	bool skipped = false;
	std::string note;

	bool passed() const { return !skipped && failures.empty(); }
};

/// Outcome of a numeric comparison: the exact residual, an optional bound
/// it must stay under, and a decimal rendering for reporting only.
struct CheckReport {
	std::string name;
	bool pass = false;
	Rat residual;
	bool has_bound = false;
	Rat bound;
	std::string note;
};

inline CheckReport make_check(std::string name, Rat residual)
{
	CheckReport r;
	r.name = std::move(name);
	r.residual = std::move(residual);
	r.pass = r.residual.is_zero();
	return r;
}

inline CheckReport make_check(std::string name, Rat residual, Rat bound)
{
	CheckReport r;
	r.name = std::move(name);
	r.residual = std::move(residual);
	r.bound = std::move(bound);
	r.has_bound = true;
	r.pass = r.residual < r.bound;
	return r;
}

} // namespace qmagnus
