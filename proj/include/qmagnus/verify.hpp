#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmagnus/report.hpp"

namespace qmagnus {

struct VerifyOptions {
	Rat q = Rat(1, 2);
	int order = 6;
	int dim = 2;
	std::uint64_t seed = 42;
	int samples = 64;
};

/// Names of the law suites, in report order.
std::vector<std::string> verify_suite_names();

/// Runs one suite. Suites that require the twisted regime are reported
/// as skipped (never silently dropped) when q = 1; the classical-limit
/// suite always runs at q = 1 whatever the requested q.
std::vector<LawReport> run_verify_suite(const std::string &name,
                                        const VerifyOptions &opts);

/// All suites in order.
std::vector<LawReport> run_verify_all(const VerifyOptions &opts);

} // namespace qmagnus
