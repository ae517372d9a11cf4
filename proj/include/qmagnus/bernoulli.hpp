#pragma once

#include <vector>

#include "qmagnus/rational.hpp"

namespace qmagnus {

/// Bernoulli numbers in the convention B_1 = -1/2, generated by the
/// recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0 (m >= 1) with B_0 = 1.
///
/// The whole Magnus layer depends on this convention: with the other
/// ("second") convention B_1 = +1/2 the grade-2 coefficient of the
/// expansion would come out as +1/2 a>a instead of -1/2 a>a.
inline Rat bernoulli(int m)
{
	static std::vector<Rat> cache{Rat(1)};
	while (static_cast<int>(cache.size()) <= m)
	{
		int n = static_cast<int>(cache.size());
		Rat s(0);
		for (int j = 0; j < n; ++j)
			s += binomial(n + 1, j) * cache[j];
		cache.push_back(-s / binomial(n + 1, n));
	}
	return cache[m];
}

} // namespace qmagnus
